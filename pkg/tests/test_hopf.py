"""Presentation layer: axiom checks, antipode computation, duality,
harpoon actions, and group-like enumeration (with an independent
polynomial-system oracle for completeness)."""

import pytest
import sympy as sp

from hopf_forge import (EigenvalueNotInField, HopfPresentation,
                        MalformedTensor, Mat, NoAntipode, OrderMismatch,
                        apply_S_power, check_axioms, compute_antipode, cyc,
                        delta_op, dual, find_grouplikes, harpoon_left,
                        harpoon_right, is_grouplike, lift_order,
                        root_of_unity)


def test_axioms_hold_on_corpus(corpus, sw):
    for name, h in corpus.items():
        checklist = check_axioms(h)
        assert checklist.all_pass, f"{name}: {checklist.failures()}"
    assert check_axioms(sw).all_pass


def test_axiom_names_are_stable(t3):
    names = [name for name, _, _ in check_axioms(t3).results]
    assert names == ["associativity", "unit", "coassociativity", "counit",
                     "comult-algebra-map", "counit-algebra-map",
                     "antipode-left", "antipode-right"]


def test_recomputed_antipode_matches_stored(z3, z15, t3, t5, t3d, sw):
    for h in (z3, z15, t3, t5, t3d, sw):
        assert compute_antipode(h) == h.antipode, h.name


def test_corrupted_antipode_fails_axioms(t3):
    bad = [list(row) for row in t3.antipode.data]
    bad[0][1] = bad[0][1] + 1
    h = HopfPresentation(
        name="corrupted", dim=t3.dim, order=t3.order,
        mult_entries=_entries(t3)[0], comult_entries=_entries(t3)[1],
        unit=t3.unit, counit=t3.counit, antipode=Mat(t3.order, bad))
    checklist = check_axioms(h)
    failed = dict((name, ok) for name, ok, _ in checklist.results)
    assert not failed["antipode-left"] or not failed["antipode-right"]


def _entries(h):
    mult = [(i, j, k, c) for i in range(h.dim) for j in range(h.dim)
            for k, c in h.mult[i][j].items()]
    comult = [(i, j, k, c) for i in range(h.dim)
              for (j, k), c in h.comult[i].items()]
    return mult, comult


def test_malformed_tensor_rejected():
    one = cyc(1, 1)
    with pytest.raises(MalformedTensor):
        HopfPresentation(name="bad", dim=2, order=1,
                         mult_entries=[(0, 0, 5, one)], comult_entries=[],
                         unit=(one, cyc(1, 0)), counit=(one, one))


def test_duplicate_entries_accumulate():
    one = cyc(1, 1)
    zero = cyc(1, 0)
    h = HopfPresentation(
        name="acc", dim=1, order=1,
        mult_entries=[(0, 0, 0, cyc(1, 2)), (0, 0, 0, cyc(1, -1))],
        comult_entries=[(0, 0, 0, one)], unit=(one,), counit=(one,))
    assert h.mult[0][0][0] == 1
    assert check_axioms(h).all_pass
    assert zero not in h.mult[0][0].values()


def test_double_dual_recovers_structure(t3, z5, sw):
    for h in (t3, z5, sw):
        dd = dual(dual(h))
        assert dd.same_structure(h), h.name


def test_dual_transposes_antipode(t3):
    d = dual(t3)
    assert d.antipode == t3.antipode.transpose()
    assert d.dim == t3.dim and d.order == t3.order


def test_harpoon_counit_acts_as_identity(t3, sw):
    for h in (t3, sw):
        eps = h.counit
        for i in range(h.dim):
            e = h.basis_element(i)
            assert harpoon_left(h, eps, e) == e
            assert harpoon_right(h, e, eps) == e


def test_harpoon_module_actions_compose(t3d, t3):
    # (beta * gamma) -> h == beta -> (gamma -> h): left harpoon makes H a
    # left module over H* (and symmetrically on the right)
    h = t3
    hd = t3d
    for i in (1, 3):
        for j in (2, 4):
            beta = hd.basis_element(i)
            gamma = hd.basis_element(j)
            prod = hd.multiply(beta, gamma)
            for t in (0, 4, 7):
                e = h.basis_element(t)
                lhs = harpoon_left(h, prod, e)
                rhs = harpoon_left(h, beta, harpoon_left(h, gamma, e))
                assert lhs == rhs
                lhs_r = harpoon_right(h, e, prod)
                rhs_r = harpoon_right(h, harpoon_right(h, e, beta), gamma)
                assert lhs_r == rhs_r


def test_delta_op_swaps_legs(t3, z5):
    # cocommutative group algebra: delta_op = delta; Taft: not
    n = z5.dim
    for i in range(n):
        e = z5.basis_element(i)
        flat = [cyc(z5.order, 0)] * (n * n)
        for (j, k), c in z5.comult[i].items():
            flat[j * n + k] = c
        assert delta_op(z5, e) == tuple(flat)
    swapped = False
    m = t3.dim
    for i in range(m):
        e = t3.basis_element(i)
        flat = [cyc(t3.order, 0)] * (m * m)
        for (j, k), c in t3.comult[i].items():
            flat[j * m + k] = c
        if delta_op(t3, e) != tuple(flat):
            swapped = True
    assert swapped, "Taft comultiplication is not cocommutative"


def test_apply_s_power(t3):
    for i in range(t3.dim):
        e = t3.basis_element(i)
        assert apply_S_power(t3, 0, e) == e
        s1 = apply_S_power(t3, 1, e)
        assert apply_S_power(t3, 2, e) == \
            tuple(t3.antipode.apply(s1))
    # S has order 2n on the Taft family: S^6 = id for n = 3
    assert t3.s_power_matrix(6) == Mat.identity(t3.order, t3.dim)
    assert t3.s_power_matrix(2) != Mat.identity(t3.order, t3.dim)


# -- group-likes -----------------------------------------------------------------


def test_grouplikes_of_group_algebra_are_basis(z5, z3z3):
    for h in (z5, z3z3):
        found = find_grouplikes(h)
        assert len(found) == h.dim
        expect = {h.basis_element(i) for i in range(h.dim)}
        assert {g.coords for g in found} == expect


def test_grouplikes_of_taft_are_powers_of_g(t3, t5):
    for h, n in ((t3, 3), (t5, 5)):
        found = find_grouplikes(h)
        # basis ordering is g^i x^j at index i*n + j; powers of g sit at j=0
        expect = {h.basis_element(i * n) for i in range(n)}
        assert {g.coords for g in found} == expect


def test_grouplikes_form_a_group(t3, z3z3):
    for h in (t3, z3z3):
        found = {g.coords for g in find_grouplikes(h)}
        for a in found:
            for b in found:
                assert h.multiply(a, b) in found
            assert tuple(h.antipode.apply(a)) in found, "inverse closes"


def test_dual_taft_grouplikes_are_characters(t3d):
    found = find_grouplikes(t3d)
    assert len(found) == 3
    for g in found:
        assert is_grouplike(t3d, g)


def test_zero_is_not_grouplike(t3):
    assert not is_grouplike(t3, (cyc(3, 0),) * t3.dim)


def test_grouplike_enumeration_raises_when_field_too_small(z5):
    with pytest.raises(EigenvalueNotInField):
        find_grouplikes(dual(z5))


def _oracle_grouplike_vectors(h, min_poly_of_w=None):
    """All solutions of Delta(a) = a (x) a, eps(a) = 1 via sympy.solve,
    independent of the library's eigenvalue machinery.  Scalars are
    rewritten as polynomials in an abstract root w."""
    n = h.dim
    a = sp.symbols(f"a0:{n}")
    w = sp.symbols("w")

    def conv(c):
        expr = sp.Integer(0)
        for t, co in enumerate(c.coeffs):
            if co:
                expr += sp.Rational(co.numerator, co.denominator) * w ** t
        return expr

    eqs = []
    for j in range(n):
        for k in range(n):
            lhs = sp.Integer(0)
            for i in range(n):
                c = h.comult[i].get((j, k))
                if c is not None:
                    lhs += a[i] * conv(c)
            eqs.append(sp.expand(lhs - a[j] * a[k]))
    eqs.append(sum(a[i] * conv(h.counit[i]) for i in range(n)) - 1)
    gens = list(a)
    if min_poly_of_w is not None:
        eqs.append(min_poly_of_w(w))
        gens.append(w)
    sols = sp.solve(eqs, gens, dict=True)
    vectors = set()
    for sol in sols:
        vec = tuple(sol.get(ai, sp.Integer(0)) for ai in a)
        assert not any(v.free_symbols - {w} for v in vec), \
            "oracle found a positive-dimensional solution family"
        vectors.add(vec)
    return vectors


def test_grouplike_completeness_oracle_sweedler(sw):
    oracle = _oracle_grouplike_vectors(sw)
    found = find_grouplikes(sw)
    got = {tuple(sp.Rational(c.as_rational()) for c in g.coords)
           for g in found}
    assert got == oracle
    assert len(oracle) == 2


def test_grouplike_completeness_oracle_taft3(t3):
    # auxiliary root w with w^2 + w + 1 = 0 standing in for zeta_3;
    # solutions come in Galois pairs, projected down to the a-vectors
    oracle = _oracle_grouplike_vectors(t3, lambda w: w ** 2 + w + 1)
    found = find_grouplikes(t3)
    got = {tuple(sp.Rational(c.as_rational()) for c in g.coords)
           for g in found}
    assert got == oracle
    assert len(oracle) == 3


# -- no antipode / order lifting -------------------------------------------------


def idempotent_monoid_bialgebra():
    """Monoid bialgebra of {1, m : m^2 = m}: a bialgebra whose identity
    map has no convolution inverse (m is group-like but not invertible)."""
    one = cyc(1, 1)
    return HopfPresentation(
        name="k{1,m}", dim=2, order=1,
        mult_entries=[(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one),
                      (1, 1, 1, one)],
        comult_entries=[(0, 0, 0, one), (1, 1, 1, one)],
        unit=(one, cyc(1, 0)), counit=(one, one))


def test_bialgebra_axioms_without_antipode():
    h = idempotent_monoid_bialgebra()
    checklist = check_axioms(h)
    assert checklist.all_pass  # antipode axioms are not claimed when absent
    assert all(name.startswith(("assoc", "unit", "coassoc", "counit",
                                "comult", "counit"))
               for name, _, _ in checklist.results)


def test_no_antipode_detected():
    with pytest.raises(NoAntipode):
        compute_antipode(idempotent_monoid_bialgebra())


def test_lift_order_preserves_structure(t3):
    lifted = lift_order(t3, 15)
    assert lifted.order == 15
    assert check_axioms(lifted).all_pass
    assert lifted.mult[3][1].keys() == t3.mult[3][1].keys()
    assert len(find_grouplikes(lifted)) == 3
    with pytest.raises(OrderMismatch):
        lift_order(t3, 5)
