from hypothesis import given, strategies as st

from kstable.hecke import demazure_lusztig
from kstable.stable import stab_normalized
from kstable.twisted import (algebra_for, bullet_act, bullet_coefficient, kpairing,
                             localization_pairing, push_pull_element, twist_line_bundle,
                             weyl_act_dual)

ALG = algebra_for("A2")
W = ALG.W
KINDS = ["tau+", "tau-", "Y", "X", "TL"]
gens = st.tuples(st.sampled_from(KINDS), st.integers(0, 1)).map(lambda k: demazure_lusztig(ALG, *k))
elements = st.lists(gens, min_size=1, max_size=3).map(lambda gs: _prod(gs))
duals = st.sampled_from(list(W)).flatmap(
    lambda w: st.sampled_from(["+", "-"]).map(lambda s: stab_normalized(ALG, s, w)))


def _prod(gs):
    out = gs[0]
    for g in gs[1:]:
        out = out * g
    return out


@given(elements, elements, elements)
def test_twisted_product_is_associative(a, b, c):
    assert ((a * b) * c).equals(a * (b * c))


@given(elements, elements, duals)
def test_bullet_is_a_left_action(z, z2, f):
    assert bullet_act(z, bullet_act(z2, f)).equals(bullet_act(z * z2, f))


@given(elements, duals, st.sampled_from(list(W)))
def test_bullet_coefficient_matches_full_action(z, f, y):
    assert bullet_coefficient(z, f, y).equals(bullet_act(z, f).restrict(y))


@given(duals, duals)
def test_kpairing_equals_localization_pairing(f, g):
    assert kpairing(f, g).equals(localization_pairing(f, g))


def test_push_pull_of_everything_lands_in_constants():
    hat_y = push_pull_element(ALG, range(ALG.rank), "hatY")
    image = bullet_act(hat_y, stab_normalized(ALG, "-", W.identity))
    values = [image.restrict(w) for w in W]
    assert all(v.equals(values[0]) for v in values)


def test_coset_constancy_of_parabolic_push_pull():
    J = {0}
    WJ, _, _ = W.parabolic_data(J)
    image = bullet_act(push_pull_element(ALG, J, "hatY"), stab_normalized(ALG, "+", W.longest))
    for y in W:
        for u in WJ:
            assert image.restrict(y).equals(image.restrict(W.multiply(y, u)))


def test_weyl_action_and_twist_compose():
    f = stab_normalized(ALG, "-", W.simple[0])
    s, t = W.simple
    assert weyl_act_dual(s, weyl_act_dual(t, f)).equals(weyl_act_dual(W.multiply(s, t), f))
    back = twist_line_bundle(twist_line_bundle(f, (1, 0)), (-1, 0))
    assert back.equals(f)
