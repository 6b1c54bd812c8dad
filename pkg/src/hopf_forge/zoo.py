"""Built-in example Hopf algebras.

All constructors return fully-populated HopfPresentation objects
(including antipodes) that pass every axiom in check_axioms; that
invariant is enforced by the test suite, not re-checked on each call.
"""

from __future__ import annotations

from math import gcd

from .cyclofield import cyc, root_of_unity
from .errors import BadParameters, NotAGroup, OrderMismatch
from .hopf import HopfPresentation, dual
from .linalg import Mat, kronecker


# -- group algebras -----------------------------------------------------------


def cyclic_table(n: int):
    """Cayley table of Z/n with elements 0..n-1 under addition."""
    if n < 1:
        raise BadParameters("group order must be >= 1")
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def direct_product_table(t1, t2):
    """Cayley table of the direct product, index (i1, i2) -> i1*n2 + i2."""
    n1, n2 = len(t1), len(t2)
    out = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                for j2 in range(n2):
                    row.append(t1[i1][j1] * n2 + t2[i2][j2])
            out.append(tuple(row))
    return tuple(out)


def _validate_group(table):
    """Identity element index, after checking the table is a group."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotAGroup("Cayley table is not square over 0..n-1")
    identity = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    for i in range(n):
        if identity not in table[i]:
            raise NotAGroup(f"element {i} has no inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroup(
                        f"associativity fails at ({i}, {j}, {k})")
    return identity


def build_group_algebra(table, cyclotomic_order: int = 1,
                        name: str | None = None,
                        basis=None) -> HopfPresentation:
    """Group algebra k[G] from a Cayley table, over Q(zeta_order).

    Basis element i is the group element i; all of them are grouplike.
    """
    identity = _validate_group(table)
    n = len(table)
    one = cyc(cyclotomic_order, 1)
    mult_entries = [(i, j, table[i][j], one)
                    for i in range(n) for j in range(n)]
    comult_entries = [(i, i, i, one) for i in range(n)]
    zero = cyc(cyclotomic_order, 0)
    unit = tuple(one if i == identity else zero for i in range(n))
    counit = tuple(one for _ in range(n))
    inv = [next(j for j in range(n) if table[i][j] == identity)
           for i in range(n)]
    s = Mat(cyclotomic_order,
            [[one if inv[j] == i else zero for j in range(n)]
             for i in range(n)], cols=n)
    return HopfPresentation(
        name=name or f"group_algebra({n})", dim=n, order=cyclotomic_order,
        mult_entries=mult_entries, comult_entries=comult_entries,
        unit=unit, counit=counit, antipode=s,
        basis=basis if basis is not None
        else tuple(f"g{i}" for i in range(n)))


def build_cyclic_group_algebra(n: int, cyclotomic_order: int = 1,
                               name: str | None = None) -> HopfPresentation:
    labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return build_group_algebra(cyclic_table(n), cyclotomic_order,
                               name=name or f"k[Z{n}]", basis=tuple(labels))


# -- Taft algebras ------------------------------------------------------------


def build_taft(n: int, root_power: int = 1,
               cyclotomic_order: int | None = None,
               name: str | None = None) -> HopfPresentation:
    """Taft algebra of dimension n^2 with omega = (primitive n-th root)^±.

    Generators g (grouplike, g^n = 1) and x (skew-primitive, x^n = 0)
    with x g = omega g x, Delta(x) = 1 (x) x + x (x) g, over
    Q(zeta_cyclotomic_order).  The scalar omega is zeta_n^root_power
    embedded in the working field, so root_power must be coprime to n and
    n must divide lcm(2, cyclotomic_order).

    Basis is g^i x^j at index i*n + j.  n = 2 gives the 4-dimensional
    algebra with S^2 != id of smallest dimension (see sweedler()).
    """
    if n < 2:
        raise BadParameters("taft dimension parameter must be >= 2")
    if gcd(root_power, n) != 1:
        raise BadParameters(
            f"root_power {root_power} is not coprime to {n}; omega would "
            "not be a primitive n-th root of unity")
    order = n if cyclotomic_order is None else cyclotomic_order
    if order % n == 0:
        omega = root_of_unity(order, (order // n) * root_power)
    elif n == 2:
        omega = cyc(order, -1)
    else:
        raise BadParameters(
            f"Q(zeta_{order}) contains no primitive {n}-th root of unity; "
            f"use a cyclotomic order divisible by {n}")
    dim = n * n
    zero, one = cyc(order, 0), cyc(order, 1)

    def idx(i, j):
        return (i % n) * n + j

    # products of basis monomials: (g^i x^j)(g^k x^l) = w^(jk) g^(i+k) x^(j+l)
    mult_entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l < n:
                        mult_entries.append(
                            (idx(i, j), idx(k, l), idx(i + k, j + l),
                             omega ** (j * k)))

    def el_mult(a: dict, b: dict) -> dict:
        out = {}
        for (i, j), ca in a.items():
            for (k, l), cb in b.items():
                if j + l < n:
                    key = ((i + k) % n, j + l)
                    c = ca * cb * omega ** (j * k)
                    out[key] = out.get(key, zero) + c
        return {k: v for k, v in out.items() if v}

    def tens_mult(a: dict, b: dict) -> dict:
        out = {}
        for (p1, q1), ca in a.items():
            for (p2, q2), cb in b.items():
                left = el_mult({p1: one}, {p2: one})
                right = el_mult({q1: one}, {q2: one})
                for lk, lc in left.items():
                    for rk, rc in right.items():
                        c = ca * cb * lc * rc
                        key = (lk, rk)
                        out[key] = out.get(key, zero) + c
        return {k: v for k, v in out.items() if v}

    # Delta on monomials: Delta(g)^i * Delta(x)^j
    dx = {((0, 0), (0, 1)): one, ((0, 1), (1, 0)): one}
    dx_pows = [{((0, 0), (0, 0)): one}]
    for _ in range(n - 1):
        dx_pows.append(tens_mult(dx_pows[-1], dx))
    comult_entries = []
    for i in range(n):
        dg_i = {((i, 0), (i, 0)): one}
        for j in range(n):
            for ((p1, q1), (p2, q2)), c in tens_mult(dg_i, dx_pows[j]).items():
                comult_entries.append(
                    (idx(i, j), idx(p1, q1), idx(p2, q2), c))

    unit = tuple(one if t == idx(0, 0) else zero for t in range(dim))
    counit = tuple(one if t % n == 0 else zero for t in range(dim))

    # S(g) = g^(n-1), S(x) = -x g^(n-1); extend antimultiplicatively:
    # S(g^i x^j) = S(x)^j S(g)^i
    sg = {(n - 1, 0): one}
    sx = el_mult({(0, 1): -one}, sg)
    s_cols = []
    for i in range(n):
        sg_i = {(0, 0): one}
        for _ in range(i):
            sg_i = el_mult(sg_i, sg)
        sx_j = {(0, 0): one}
        for j in range(n):
            img = el_mult(sx_j, sg_i)
            col = [zero] * dim
            for (p, q), c in img.items():
                col[idx(p, q)] = c
            s_cols.append((idx(i, j), col))
            sx_j = el_mult(sx_j, sx)
    s_cols.sort()
    s = Mat.from_cols(order, [c for _, c in s_cols], rows_n=dim)

    labels = []
    for i in range(n):
        for j in range(n):
            gpart = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            xpart = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            labels.append((gpart + " " + xpart).strip() or "1")
    return HopfPresentation(
        name=name or f"taft({n})", dim=dim, order=order,
        mult_entries=mult_entries, comult_entries=comult_entries,
        unit=unit, counit=counit, antipode=s, basis=tuple(labels))


def sweedler(cyclotomic_order: int = 1) -> HopfPresentation:
    """The 4-dimensional algebra taft(2): smallest with S^2 != id."""
    return build_taft(2, cyclotomic_order=cyclotomic_order, name="sweedler")


# -- combinators --------------------------------------------------------------


def build_tensor(h1: HopfPresentation, h2: HopfPresentation,
                 name: str | None = None) -> HopfPresentation:
    """Tensor product Hopf algebra, index (i1, i2) -> i1*dim2 + i2.

    Both factors must already live over the same cyclotomic order; lift
    one of them with lift_order first if they do not (no silent
    coercion).
    """
    if h1.order != h2.order:
        raise OrderMismatch(
            f"tensor factors have orders {h1.order} and {h2.order}; "
            "lift one presentation first")
    n2 = h2.dim
    dim = h1.dim * n2
    mult_entries = []
    for i1 in range(h1.dim):
        for j1 in range(h1.dim):
            for k1, c1 in h1.mult[i1][j1].items():
                for i2 in range(n2):
                    for j2 in range(n2):
                        for k2, c2 in h2.mult[i2][j2].items():
                            mult_entries.append(
                                (i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2,
                                 c1 * c2))
    comult_entries = []
    for i1 in range(h1.dim):
        for (j1, k1), c1 in h1.comult[i1].items():
            for i2 in range(n2):
                for (j2, k2), c2 in h2.comult[i2].items():
                    comult_entries.append(
                        (i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2, c1 * c2))
    unit = tuple(h1.unit[i1] * h2.unit[i2]
                 for i1 in range(h1.dim) for i2 in range(n2))
    counit = tuple(h1.counit[i1] * h2.counit[i2]
                   for i1 in range(h1.dim) for i2 in range(n2))
    s = None
    if h1.antipode is not None and h2.antipode is not None:
        s = kronecker(h1.antipode, h2.antipode)
    labels = tuple(f"{a}(x){b}" for a in h1.basis for b in h2.basis)
    return HopfPresentation(
        name=name or f"tensor({h1.name}, {h2.name})", dim=dim,
        order=h1.order, mult_entries=mult_entries,
        comult_entries=comult_entries, unit=unit, counit=counit,
        antipode=s, basis=labels)


def build_dual(h: HopfPresentation, name: str | None = None):
    """Dual Hopf algebra on the dual basis (convenience re-export)."""
    d = dual(h)
    if name is not None:
        d.name = name
    return d
