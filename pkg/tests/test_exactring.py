import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kstable.exactring import (CharacterAssignment, LaurentPoly, RationalFn, SingularCharacter,
                               exact_divide, factor_atoms, newton_polygon, pack, parse_character,
                               probably_equal, unpack)
from kstable.rootdata import build_root_system

RANK = 2
# B2 and its dual share a lattice; both register atoms, which is the mix that
# defeats greedy trial division (1 - e^{ω1} is a B2 atom, 1 - e^{2ω1} a C2 atom)
_B2 = build_root_system("B2")
ROOTS = sorted(set(_B2.roots) | set(_B2.dual_system.roots))

exponents = st.tuples(st.integers(-3, 3), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(
    lambda d: LaurentPoly.from_terms(((qh, wt, c) for (qh, wt), c in d.items()), RANK))
atom_weights = st.sampled_from(ROOTS)
atom_qs = st.sampled_from([-2, 0, 2])


def atom_product(factors):
    out = LaurentPoly.constant(1, RANK)
    for qh, wt in factors:
        out = out * LaurentPoly.atom(pack(qh, wt), RANK)
    return out


@given(st.integers(-40, 40), st.tuples(st.integers(-50, 50), st.integers(-50, 50)))
def test_pack_roundtrip(qh, wt):
    assert unpack(pack(qh, wt), RANK) == (qh, wt)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == LaurentPoly({}, RANK)


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_divide(b) == a


@given(st.lists(st.tuples(atom_qs, atom_weights), min_size=1, max_size=4), st.integers(1, 6))
def test_factor_atoms_reconstructs(factors, c):
    p = atom_product(factors) * c
    const, unit, atoms = factor_atoms(p)
    rebuilt = LaurentPoly.from_key(unit, RANK, const)
    for a, k in atoms.items():
        for _ in range(k):
            rebuilt = rebuilt * LaurentPoly.atom(a, RANK)
    assert rebuilt == p
    assert sum(atoms.values()) == len(factors)


def test_factor_prefers_the_larger_atom():
    # (1 - e^{2ω1}) must not be split into (1 - e^{ω1})(1 + e^{ω1})
    p = atom_product([(0, (2, 0)), (2, (1, 0))])
    _, _, atoms = factor_atoms(p)
    assert sum(atoms.values()) == 2


@given(st.lists(st.tuples(atom_qs, atom_weights), min_size=1, max_size=3), polys)
def test_rational_inverse(factors, num):
    if num.is_zero():
        return
    den = RationalFn.from_poly(atom_product(factors))
    f = RationalFn.from_poly(num) / den
    assert (f * den).equals(RationalFn.from_poly(num))
    assert (den.inverse() * den).equals(1)


@given(polys, polys)
def test_invert_weights_is_an_involutive_ring_map(a, b):
    fa, fb = RationalFn.from_poly(a), RationalFn.from_poly(b)
    assert (fa * fb).invert_weights().equals(fa.invert_weights() * fb.invert_weights())
    assert fa.invert_weights().invert_weights().equals(fa)


def test_exact_divide_helper_rejects_non_multiple():
    x = LaurentPoly.atom(pack(0, (1, 0)), RANK)
    assert exact_divide(x * x, x) == x
    assert exact_divide(x + 1, x) is None


def test_character_evaluation_and_singularity():
    tau = CharacterAssignment(Fraction(4), omega=(Fraction(3), Fraction(1, 2)))
    f = RationalFn.inverse_atom(pack(0, (1, 0)), RANK)
    assert tau(f) == Fraction(1, 1 - 3)
    singular = CharacterAssignment(Fraction(4), omega=(Fraction(1), Fraction(2)))
    with pytest.raises(SingularCharacter):
        singular(f)
    assert tau.inverse().weight_value((1, 0)) == Fraction(1, 3)


def test_parse_character_alpha_values():
    tau = parse_character("alpha1=3/2,alpha2=5,q=9", [[2, -1], [-1, 2]])
    assert tau.q == 9 and tau.sqrt_q == 3
    assert tau.weight_value((2, -1)) == Fraction(3, 2)
    assert tau.weight_value((1, 1)) == Fraction(15, 2)
    with pytest.raises(ValueError):
        tau.weight_value((1, 0))
    with pytest.raises(ValueError):
        parse_character("alpha1=2", [[2]])


def test_probably_equal_is_sound_on_unequal_input():
    a = RationalFn.from_poly(LaurentPoly.atom(pack(0, (1, 0)), RANK))
    assert probably_equal(a, a, random.Random(0))
    assert not probably_equal(a, a + 1, random.Random(0))


def test_newton_polygon_containment():
    p = LaurentPoly.from_terms([(0, (0, 0), 1), (0, (2, 0), 1), (0, (0, 2), 1)], RANK)
    inner = LaurentPoly.from_terms([(0, (1, 1), 1)], RANK)
    assert newton_polygon(p).contains(newton_polygon(inner))
    assert not newton_polygon(inner).contains(newton_polygon(p))
    assert not newton_polygon(p).contains(newton_polygon(inner).translate((1, 1)))
