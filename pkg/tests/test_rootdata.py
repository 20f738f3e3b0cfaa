import pytest
from hypothesis import given, strategies as st

from kstable.rootdata import CartanError, build_root_system, cartan_matrix

ORDERS = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48}


@pytest.mark.parametrize("label,order", ORDERS.items())
def test_group_order_and_longest_element(label, order):
    rs = build_root_system(label)
    W = rs.weyl
    assert len(W) == order
    assert W.longest.length == len(rs.positive_roots)
    assert len(rs.roots) == 2 * len(rs.positive_roots)


@pytest.mark.parametrize("bad", ["Z9", "B1", "G3", "D3", ""])
def test_rejects_unknown_labels(bad):
    with pytest.raises(CartanError):
        cartan_matrix(bad)


def test_dual_system_transposes_and_swaps_lengths():
    rs = build_root_system("B2")
    dual = rs.dual_system
    assert dual.cartan == tuple(zip(*rs.cartan))
    assert len(dual.positive_roots) == len(rs.positive_roots)
    assert dual.dual_system.cartan == rs.cartan


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_inversion_sets_and_lengths(label):
    rs = build_root_system(label)
    W = rs.weyl
    for w in W:
        inv = W.inversion_set(w)
        assert len(inv) == w.length
        winv = W.inverse(w)
        assert all(not rs.is_positive_root(winv.act(b)) for b in inv)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_bruhat_order_is_graded_partial_order(label):
    W = build_root_system(label).weyl
    for u in W:
        assert W.bruhat_leq(W.identity, u) and W.bruhat_leq(u, W.longest)
        for v in W:
            if W.bruhat_leq(u, v) and W.bruhat_leq(v, u):
                assert u == v
            if W.bruhat_leq(u, v):
                assert u.length <= v.length


@given(st.lists(st.integers(0, 2), max_size=10))
def test_word_products_agree_with_matrices(word):
    W = build_root_system("A3").weyl
    w = W.from_word(word)
    expected = W.identity
    for i in word:
        expected = W.multiply(expected, W.simple[i])
    assert w == expected
    assert W.multiply(w, W.inverse(w)) == W.identity


def test_reduced_words_of_longest_element_in_A3():
    W = build_root_system("A3").weyl
    words = W.reduced_words(W.longest)
    assert len(words) == 16
    assert all(W.is_reduced_word(word, W.longest) for word in words)


def test_parabolic_data():
    W = build_root_system("A2").weyl
    WJ, minimal, w0J = W.parabolic_data({0})
    assert len(WJ) == 2 and len(minimal) == 3
    assert w0J == W.simple[0]
    with pytest.raises(ValueError):
        W.parabolic_data({5})
