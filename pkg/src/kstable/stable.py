"""Stable bases of T*(G/B) and T*(G/P_J) in the algebraic model.

St⁺_w = τ⁺_{w^{-1}} ∙ pt_e and St⁻_w = (τ⁻_{w0 w})^{-1} ∙ pt_{w0}, with
pt = x_{-w0} f.  The geometric normalizations are

    stab₊(w) = q^{-ℓ(w)/2} St⁺_w,     stab₋(w) = q^{ℓ(w0) - ℓ(w)/2} St⁻_w.

Restriction coefficients stab₋(w)|_v are also computed two other ways: by the
localization recursion along a descent of v, and in closed form from the
root-polynomial coefficients K.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exactring import RationalFn, newton_polygon
from .hecke import hecke_invert, hecke_word, transition_data
from .rootdata import WeylElt
from .rootpoly import k_coefficient
from .twisted import (DualElt, TwistedAlgebra, bullet_act, bullet_coefficient,
                      kpairing, push_pull_element)


def make_pt(alg: TwistedAlgebra, which: str = "e") -> DualElt:
    """pt_e = x_{-w0} f_e or pt_{w0} = x_{-w0} f_{w0}."""
    if which == "e":
        w = alg.W.identity
    elif which in ("w0", "w₀"):
        w = alg.W.longest
    else:
        raise ValueError(f"unknown point {which!r}")
    return alg.dual({w: alg.x_neg_w0})


def _check_sign(sign: str) -> None:
    if sign not in ("+", "-"):
        raise ValueError(f"chamber sign must be '+' or '-', got {sign!r}")


def st_element(alg: TwistedAlgebra, sign: str, w: WeylElt) -> DualElt:
    _check_sign(sign)
    key = ("St", sign, w.index)
    if key not in alg._cache:
        W = alg.W
        if sign == "+":
            elt = bullet_act(hecke_word(alg, "tau+", W.inverse(w)), make_pt(alg, "e"))
        else:
            op = hecke_invert(alg, "tau-", W.multiply(W.longest, w))
            elt = bullet_act(op, make_pt(alg, "w0"))
        alg._cache[key] = elt
    return alg._cache[key]


def stab_scale(alg: TwistedAlgebra, sign: str, w: WeylElt) -> RationalFn:
    """The power of q with stab±(w) = scale · St±_w."""
    if sign == "+":
        return alg.qpow(-w.length)
    return alg.qpow(2 * alg.W.longest.length - w.length)


def stab_normalized(alg: TwistedAlgebra, sign: str, w: WeylElt) -> DualElt:
    _check_sign(sign)
    key = ("stab", sign, w.index)
    if key not in alg._cache:
        alg._cache[key] = st_element(alg, sign, w) * stab_scale(alg, sign, w)
    return alg._cache[key]


@dataclass
class StableFamily:
    alg: TwistedAlgebra
    sign: str
    normalized: bool
    table: dict[WeylElt, DualElt] = field(default_factory=dict)

    def __getitem__(self, w: WeylElt) -> DualElt:
        return self.table[w]

    def restriction(self, w: WeylElt, v: WeylElt) -> RationalFn:
        return self.table[w].restrict(v)


def stable_family(alg: TwistedAlgebra, sign: str, normalized: bool = True) -> StableFamily:
    build = stab_normalized if normalized else st_element
    return StableFamily(alg, sign, normalized, {w: build(alg, sign, w) for w in alg.W})


def diagonal_value(alg: TwistedAlgebra, sign: str, v: WeylElt) -> RationalFn:
    """stab±(v)|_v from the product formulas over positive roots β.

    minus: q^{ℓ(v)/2} ∏_{v^{-1}β>0} (1 - q e^{-β}) ∏_{v^{-1}β<0} (1 - e^{β})
    plus:  q^{-ℓ(v)/2} ∏_{v^{-1}β>0} (1 - e^{β}) ∏_{v^{-1}β<0} (q - e^{-β})
    """
    rs = alg.rs
    vinv = alg.W.inverse(v)
    out = alg.qpow(v.length if sign == "-" else -v.length)
    for b in rs.positive_roots:
        up = rs.is_positive_root(vinv.act(b))
        if sign == "-":
            out = out * (alg.binomial(rs.neg(b), 2) if up else alg.binomial(b))
        else:
            out = out * (alg.binomial(b) if up else alg.q - alg.e(rs.neg(b)))
    return out


def restrict_recursive(alg: TwistedAlgebra, w: WeylElt, v: WeylElt) -> RationalFn:
    """stab₋(w)|_v by induction on ℓ(v).

    Write v = u s_α with ℓ(u) < ℓ(v).  Then

        stab(w)|_{u s} = c · stab(w)|_u + q^{1/2}(1 - e^{uα})/(1 - q e^{-uα}) · stab(w s)|_u

    where c = (1-q) e^{uα}/(1 - q e^{-uα}) if w s < w and (1-q)/(1 - q e^{-uα}) otherwise.
    """
    memo = alg._cache.setdefault("recursive", {})
    return _recursive(alg, w, v, memo)


def _recursive(alg: TwistedAlgebra, w: WeylElt, v: WeylElt, memo: dict) -> RationalFn:
    key = (w.index, v.index)
    if key in memo:
        return memo[key]
    W = alg.W
    if not W.bruhat_leq(w, v):
        val = alg.zero
    elif v == w:
        val = diagonal_value(alg, "-", v)
    else:
        i = next(i for i in range(alg.rank) if W.right_mult(v, i).length < v.length)
        u = W.right_mult(v, i)
        ws = W.right_mult(w, i)
        ua = u.act(alg.rs.simple_roots[i])
        den = alg.inv_binomial(alg.rs.neg(ua), 2)
        c = (1 - alg.q) * den
        if ws.length < w.length:
            c = c * alg.e(ua)
        val = c * _recursive(alg, w, u, memo)
        if W.bruhat_leq(ws, u):
            val = val + alg.qpow(1) * alg.binomial(ua) * den * _recursive(alg, ws, u, memo)
        val = RationalFn.from_poly(val.to_poly()) if not val.is_zero() else alg.zero
    memo[key] = val
    return val


def restrict_closed(alg: TwistedAlgebra, sign: str, w: WeylElt, v: WeylElt) -> RationalFn:
    """stab±(w)|_v in closed form.

    plus:  q^{-ℓ(w)/2} v(a⁺_{w^{-1}, v^{-1}}) x_{-w0}
    minus: q^{ℓ(w)/2} K_{w,v} ∏_{β>0, v^{-1}β>0} (1 - q e^{-β}) ∏_{β>0, v^{-1}β<0} (1 - e^{β})
    """
    _check_sign(sign)
    W = alg.W
    rs = alg.rs
    if sign == "+":
        a = transition_data(alg, "a+")(W.inverse(w), W.inverse(v))
        if a.is_zero():
            return alg.zero
        return alg.qpow(-w.length) * alg.act(v, a) * alg.x_neg_w0
    K = k_coefficient(alg, w, v)
    if K.is_zero():
        return alg.zero
    vinv = W.inverse(v)
    out = alg.qpow(w.length) * K
    for b in rs.positive_roots:
        if rs.is_positive_root(vinv.act(b)):
            out = out * alg.binomial(rs.neg(b), 2)
        else:
            out = out * alg.binomial(b)
    return out


def duality_check(alg: TwistedAlgebra, w: WeylElt, u: WeylElt) -> RationalFn:
    """Unit coefficient of hat-Y_Π ∙ (St⁺_w · St⁻_u); expected δ_{w,u} q^{-ℓ(w0 u)}."""
    hat_y = push_pull_element(alg, range(alg.rank), "hatY")
    prod = st_element(alg, "+", w) * st_element(alg, "-", u)
    return bullet_coefficient(hat_y, prod, alg.W.identity)


def duality_expected(alg: TwistedAlgebra, w: WeylElt, u: WeylElt) -> RationalFn:
    if w != u:
        return alg.zero
    return alg.qpow(-2 * alg.W.multiply(alg.W.longest, u).length)


def stab_pairing(alg: TwistedAlgebra, v: WeylElt, w: WeylElt) -> RationalFn:
    """(stab₊(v), stab₋(w)) under the K-theory pairing; expected δ_{v,w}."""
    return kpairing(stab_normalized(alg, "+", v), stab_normalized(alg, "-", w))


# degree axiom

def _integral(v: Iterable[Fraction]) -> bool:
    return all(Fraction(c).denominator == 1 for c in v)


def check_slope(alg: TwistedAlgebra, lam: Sequence) -> tuple[Fraction, ...]:
    """Validate a fractional weight λ (fundamental coordinates).

    λ must be regular (λ - uλ not integral for u ≠ e) and lie in the open
    fundamental alcove (0 < ⟨λ, β^∨⟩ < 1 for every positive root β).
    """
    lam = tuple(Fraction(c) for c in lam)
    if len(lam) != alg.rank:
        raise ValueError(f"λ has {len(lam)} coordinates, expected {alg.rank}")
    for u in alg.W:
        if u.index == 0:
            continue
        diff = [a - b for a, b in zip(lam, u.act(lam))]
        if _integral(diff):
            raise ValueError(f"λ={tuple(map(str, lam))} is not regular: λ - uλ is integral for u = {u}")
    for b in alg.rs.positive_roots:
        pairing = alg.rs.coroot_pairing(lam, b)
        if not 0 < pairing < 1:
            raise ValueError(f"λ is outside the fundamental alcove: ⟨λ,β∨⟩ = {pairing} for β = {b}")
    return lam


def degree_axiom_check(alg: TwistedAlgebra, w: WeylElt, v: WeylElt, lam: Sequence,
                       sign: str = "-") -> bool:
    """deg(stab(w)|_v) + wλ ⊆ deg(stab(v)|_v) + vλ, for v strictly after w in the chamber order.

    For the minus chamber that order is the opposite of Bruhat order, so
    the comparable pairs are v > w; for the plus chamber they are v < w.
    """
    lam = check_slope(alg, lam)
    W = alg.W
    if v != w:
        ordered = W.bruhat_leq(w, v) if sign == "-" else W.bruhat_leq(v, w)
        if not ordered:
            raise ValueError(f"{v} does not precede {w} in the {sign} chamber order")
    off = stab_normalized(alg, sign, w).restrict(v)
    if off.is_zero():
        return True
    diag = stab_normalized(alg, sign, v).restrict(v)
    inner = newton_polygon(off.to_poly()).translate(w.act(lam))
    outer = newton_polygon(diag.to_poly()).translate(v.act(lam))
    return outer.contains(inner)


# parabolic versions

def _check_minimal(alg: TwistedAlgebra, J, w: WeylElt) -> None:
    _, minimal, _ = alg.W.parabolic_data(J)
    if w not in minimal:
        raise ValueError(f"{w} is not a minimal coset representative for J={sorted(J)}")


def parabolic_st(alg: TwistedAlgebra, sign: str, J: Iterable[int], w: WeylElt) -> DualElt:
    """St^{±,J}_w = hat-Y_J ∙ St±_w for w ∈ W^J."""
    J = frozenset(J)
    _check_sign(sign)
    _check_minimal(alg, J, w)
    key = ("parSt", sign, J, w.index)
    if key not in alg._cache:
        alg._cache[key] = bullet_act(push_pull_element(alg, J, "hatY"), st_element(alg, sign, w))
    return alg._cache[key]


def parabolic_stab(alg: TwistedAlgebra, sign: str, J: Iterable[int], w: WeylElt) -> DualElt:
    return parabolic_st(alg, sign, J, w) * stab_scale(alg, sign, w)


def _coset_weight(alg: TwistedAlgebra, J: frozenset) -> RationalFn:
    """1/(x_{-w0^J} hat-x_{w0^J}), the coefficient of δ_e in hat-Y_J."""
    return push_pull_element(alg, J, "hatY").coefficient(alg.W.identity)


def parabolic_restrict_closed(alg: TwistedAlgebra, sign: str, J: Iterable[int],
                              w: WeylElt, y: WeylElt) -> RationalFn:
    """St^{±,J}_w|_y as a sum over the coset y W_J.

    Each term is St±_w|_v · v(1/(x_{-w0^J} hat-x_{w0^J})) for v ∈ y W_J, with
    St±_w|_v taken from :func:`restrict_closed`.
    """
    J = frozenset(J)
    _check_sign(sign)
    _check_minimal(alg, J, w)
    W = alg.W
    WJ, _, _ = W.parabolic_data(J)
    weight = _coset_weight(alg, J)
    unscale = stab_scale(alg, sign, w).inverse()
    out = alg.zero
    for u in WJ:
        v = W.multiply(y, u)
        r = restrict_closed(alg, sign, w, v)
        if not r.is_zero():
            out = out + r * alg.act(v, weight)
    return out * unscale


def parabolic_duality(alg: TwistedAlgebra, J: Iterable[int], w: WeylElt, v: WeylElt) -> DualElt:
    """hat-Y_{Π/J} ∙ (St^{+,J}_w · St^{-,J}_v); expected δ_{w,v} q^{-ℓ(w0 v)} times the unit."""
    J = frozenset(J)
    prod = parabolic_st(alg, "+", J, w) * parabolic_st(alg, "-", J, v)
    return bullet_act(push_pull_element(alg, J, "hatY_rel"), prod)


def parabolic_top_coefficient(alg: TwistedAlgebra, J: Iterable[int], w: WeylElt, v: WeylElt) -> RationalFn:
    """Coefficient of τ⁻_{w0} in τ⁻_w · hat-Y_J · (τ⁻_{w0 v})^{-1}."""
    J = frozenset(J)
    W = alg.W
    elt = hecke_word(alg, "tau-", w) * push_pull_element(alg, J, "hatY") \
        * hecke_invert(alg, "tau-", W.multiply(W.longest, v))
    w0 = W.longest
    return elt.coefficient(w0) / hecke_word(alg, "tau-", w0).coefficient(w0)
