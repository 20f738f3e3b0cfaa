from fractions import Fraction

import pytest

from kstable.stable import (degree_axiom_check, diagonal_value, duality_check, duality_expected,
                            parabolic_duality, parabolic_restrict_closed, parabolic_st,
                            restrict_closed, restrict_recursive, stab_normalized, stab_pairing)
from kstable.suites import a1_expected_values


def test_A1_values(algebras):
    alg = algebras("A1")
    named = {"e": alg.W.identity, "s": alg.W.simple[0]}
    for sign, w, v, want, _ in a1_expected_values(alg):
        assert stab_normalized(alg, sign, named[w]).restrict(named[v]).equals(want)
    a = alg.rs.simple_roots[0]
    s = named["s"]
    assert stab_normalized(alg, "+", s).restrict(s).equals(alg.qpow(-1) * (alg.q - alg.e(alg.rs.neg(a))))


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_three_routes_to_restrictions(algebras, label):
    alg = algebras(label)
    for w in alg.W:
        for v in alg.W:
            direct = stab_normalized(alg, "-", w).restrict(v)
            assert restrict_recursive(alg, w, v).equals(direct)
            assert restrict_closed(alg, "-", w, v).equals(direct)
            assert restrict_closed(alg, "+", w, v).equals(stab_normalized(alg, "+", w).restrict(v))
            direct.to_poly()
        for sign in "+-":
            assert stab_normalized(alg, sign, w).restrict(w).equals(diagonal_value(alg, sign, w))


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_duality_and_pairing(algebras, label):
    alg = algebras(label)
    for w in alg.W:
        for u in alg.W:
            assert duality_check(alg, w, u).equals(duality_expected(alg, w, u))
            assert stab_pairing(alg, w, u).equals(int(w == u))


def test_degree_axiom_A2(algebras):
    alg = algebras("A2")
    lam = (Fraction(1, 7), Fraction(1, 7))
    W = alg.W
    for w in W:
        for v in W:
            if W.bruhat_leq(w, v):
                assert degree_axiom_check(alg, w, v, lam)


def test_degree_axiom_rejects_bad_slopes(algebras):
    alg = algebras("A1")
    e, s = alg.W.identity, alg.W.simple[0]
    with pytest.raises(ValueError, match="not regular"):
        degree_axiom_check(alg, e, s, (Fraction(1, 2),))
    with pytest.raises(ValueError, match="alcove"):
        degree_axiom_check(alg, e, s, (Fraction(6, 5),))
    with pytest.raises(ValueError, match="precede"):
        degree_axiom_check(alg, s, e, (Fraction(2, 5),))


@pytest.mark.parametrize("J", [{0}, {1}, {0, 1}])
def test_parabolic_closed_sum(algebras, J):
    alg = algebras("A2")
    _, minimal, _ = alg.W.parabolic_data(J)
    for sign in "+-":
        for w in minimal:
            st = parabolic_st(alg, sign, J, w)
            for y in alg.W:
                assert parabolic_restrict_closed(alg, sign, J, w, y).equals(st.restrict(y))


def test_parabolic_duality_with_empty_J_is_the_full_duality(algebras):
    alg = algebras("A2")
    for w in alg.W:
        for v in alg.W:
            got = parabolic_duality(alg, set(), w, v)
            assert got.equals(alg.unit_dual * duality_expected(alg, w, v))


def test_parabolic_duality_A1_full_J_differs_by_a_unit(algebras):
    # recorded deviation: the product carries an extra factor 1/((1-qe^{α})(1-qe^{-α}))
    alg = algebras("A1")
    e = alg.W.identity
    a = alg.rs.simple_roots[0]
    got = parabolic_duality(alg, {0}, e, e).restrict(e)
    extra = alg.inv_binomial(a, 2) * alg.inv_binomial(alg.rs.neg(a), 2)
    assert got.equals(duality_expected(alg, e, e) * extra)


def test_minimal_representative_is_required(algebras):
    alg = algebras("A2")
    with pytest.raises(ValueError):
        parabolic_st(alg, "+", {0}, alg.W.simple[0])
