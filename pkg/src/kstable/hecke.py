"""Demazure-Lusztig elements and triangular basis changes in Q_W.

For a simple root α (index i)::

    τ⁺_α = (q-1)/(1-e^{α}) + (q-e^{α})/(1-e^{-α}) δ_α
    τ⁻_α = (q-1)/(1-e^{α}) + (1-qe^{-α})/(1-e^{α}) δ_α
    Y_α  = 1/(1-e^{α}) + 1/(1-e^{-α}) δ_α
    X_α  = Y_α - 1
    T^L_α = (q-1)/(1-e^{α}) + (1-qe^{α})/(1-e^{α}) δ_α

``Yneg`` is Y_{-α}, the same element with α replaced by -α.  Products along
reduced words do not depend on the word; :func:`hecke_word` caches them per
Weyl element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactring import RationalFn, pack
from .rootdata import WeylElt
from .twisted import GroupAlgElt, TwistedAlgebra

KINDS = ("tau+", "tau-", "Y", "Yneg", "X", "TL")


def demazure_lusztig(alg: TwistedAlgebra, kind: str, i: int) -> GroupAlgElt:
    key = ("gen", kind, i)
    if key in alg._cache:
        return alg._cache[key]
    a = alg.rs.simple_roots[i]
    na = alg.rs.neg(a)
    s = alg.W.simple[i]
    q = alg.q
    inv_pos = alg.inv_binomial(a)      # 1/(1-e^{α})
    inv_neg = alg.inv_binomial(na)     # 1/(1-e^{-α})
    if kind == "tau+":
        coeffs = {alg.W.identity: (q - 1) * inv_pos, s: alg.x_tilde(a) * inv_neg}
    elif kind == "tau-":
        coeffs = {alg.W.identity: (q - 1) * inv_pos, s: alg.x_hat(a) * inv_pos}
    elif kind == "Y":
        coeffs = {alg.W.identity: inv_pos, s: inv_neg}
    elif kind == "Yneg":
        coeffs = {alg.W.identity: inv_neg, s: inv_pos}
    elif kind == "X":
        coeffs = {alg.W.identity: inv_pos - 1, s: inv_neg}
    elif kind == "TL":
        coeffs = {alg.W.identity: (q - 1) * inv_pos, s: alg.binomial(a, 2) * inv_pos}
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    elt = alg.element(coeffs)
    alg._cache[key] = elt
    return elt


def _word_for(alg: TwistedAlgebra, w: WeylElt, word: Sequence[int] | None) -> tuple[int, ...]:
    if word is None:
        return w.word
    word = tuple(word)
    if not alg.W.is_reduced_word(word):
        raise ValueError(f"word {word} is not reduced")
    if alg.W.from_word(word) != w:
        raise ValueError(f"word {word} is not a word for {w}")
    return word


def hecke_word(alg: TwistedAlgebra, kind: str, w: WeylElt, word: Sequence[int] | None = None) -> GroupAlgElt:
    """Product of generators along a reduced word of w (the canonical one by default)."""
    word = _word_for(alg, w, word)
    if word == w.word:
        key = ("word", kind, w.index)
        if key in alg._cache:
            return alg._cache[key]
        if word:
            prefix = alg.W.from_word(word[:-1])
            elt = hecke_word(alg, kind, prefix) * demazure_lusztig(alg, kind, word[-1])
        else:
            elt = alg.delta(alg.W.identity)
        alg._cache[key] = elt
        return elt
    elt = alg.delta(alg.W.identity)
    for i in word:
        elt = elt * demazure_lusztig(alg, kind, i)
    return elt


def generator_inverse(alg: TwistedAlgebra, kind: str, i: int) -> GroupAlgElt:
    """τ_i^{-1} = q^{-1}(τ_i + 1 - q)."""
    if kind not in ("tau+", "tau-", "TL"):
        raise ValueError(f"{kind} generators are not invertible")
    t = demazure_lusztig(alg, kind, i)
    return alg.qpow(-2) * (t + (1 - alg.q))


def hecke_invert(alg: TwistedAlgebra, kind: str, w: WeylElt) -> GroupAlgElt:
    """(τ_w)^{-1} as the reversed product of generator inverses."""
    key = ("inv", kind, w.index)
    if key in alg._cache:
        return alg._cache[key]
    if w.length == 0:
        elt = alg.delta(w)
    else:
        # τ_w = τ_{w s} τ_s, so τ_w^{-1} = τ_s^{-1} τ_{ws}^{-1}
        s = w.word[-1]
        elt = generator_inverse(alg, kind, s) * hecke_invert(alg, kind, alg.W.right_mult(w, s))
    alg._cache[key] = elt
    return elt


def demazure(alg: TwistedAlgebra, beta, p: RationalFn) -> RationalFn:
    """Dem_β(p) = (s_β p - p)/(1 - e^{-β}) for a simple root β or its negative."""
    rs = alg.rs
    if tuple(beta) in rs.simple_roots:
        i = rs.simple_roots.index(tuple(beta))
    else:
        i = rs.simple_roots.index(rs.neg(beta))
    num = alg.act(alg.W.simple[i], p) - p
    poly_num = num.to_poly() if num.is_poly() else None
    if poly_num is not None:
        q = poly_num.divide_atom(pack(0, rs.neg(beta)))
        if q is None:
            raise ArithmeticError("Demazure numerator not divisible; arithmetic bug")
        return RationalFn.from_poly(q)
    return num / alg.x(beta)


def basis_convert(alg: TwistedAlgebra, elt: GroupAlgElt, target: str) -> dict[WeylElt, RationalFn]:
    """Coefficients of elt in the basis {B_v} where B_v = hecke_word(target, v).

    Triangular back-substitution from the top of the Bruhat order.
    """
    if target == "delta":
        return dict(elt.coeffs)
    rest = dict(elt.coeffs)
    out: dict[WeylElt, RationalFn] = {}
    for v in sorted(alg.W.elements, key=lambda w: (-w.length, -w.index)):
        c = rest.pop(v, None)
        if c is None or c.is_zero():
            continue
        basis = hecke_word(alg, target, v)
        coeff = c / basis.coefficient(v)
        out[v] = coeff
        for u, m in basis.coeffs.items():
            if u == v:
                continue
            val = rest.get(u, alg.zero) - coeff * m
            if val.is_zero():
                rest.pop(u, None)
            else:
                rest[u] = val
    if rest:
        raise ArithmeticError("basis conversion left a remainder")
    return out


@dataclass
class TransitionData:
    """A W×W table of rational functions, rows and columns in ShortLex order."""

    alg: TwistedAlgebra
    family: str
    table: dict[tuple[int, int], RationalFn] = field(default_factory=dict)

    def entry(self, w: WeylElt, v: WeylElt) -> RationalFn:
        return self.table.get((w.index, v.index), self.alg.zero)

    __call__ = entry

    def row(self, w: WeylElt) -> dict[WeylElt, RationalFn]:
        return {v: self.entry(w, v) for v in self.alg.W if (w.index, v.index) in self.table}

    def matmul(self, other: "TransitionData") -> "TransitionData":
        W = self.alg.W
        out: dict[tuple[int, int], RationalFn] = {}
        for w in W:
            for v in W:
                acc = self.alg.zero
                for u in W:
                    a = self.table.get((w.index, u.index))
                    b = other.table.get((u.index, v.index))
                    if a is not None and b is not None:
                        acc = acc + a * b
                if not acc.is_zero():
                    out[(w.index, v.index)] = acc
        return TransitionData(self.alg, f"{self.family}*{other.family}", out)

    def is_identity(self) -> bool:
        W = self.alg.W
        return all(self.entry(w, v).equals(1 if w == v else 0) for w in W for v in W)

    def rows(self) -> list[list[str]]:
        W = self.alg.W
        return [[str(self.entry(w, v)) for v in W] for w in W]


def transition_data(alg: TwistedAlgebra, family: str) -> TransitionData:
    """a±, b±, d± of the triangular expansions.

    a±: τ±_w = Σ a_{w,v} δ_v;  b±: δ_w = Σ b_{w,v} τ±_v;  d±: τ±_w = Σ d_{w,v} Y_{±v}.
    """
    key = ("transition", family)
    if key in alg._cache:
        return alg._cache[key]
    kind, sign = family[0], family[1:]
    if sign not in ("+", "-") or kind not in "abd":
        raise ValueError(f"unknown family {family!r}")
    tau = "tau" + sign
    table: dict[tuple[int, int], RationalFn] = {}
    for w in alg.W:
        if kind == "a":
            row = hecke_word(alg, tau, w).coeffs
        elif kind == "b":
            row = basis_convert(alg, alg.delta(w), tau)
        else:
            row = basis_convert(alg, hecke_word(alg, tau, w), "Y" if sign == "+" else "Yneg")
        for v, c in row.items():
            if not c.is_zero():
                table[(w.index, v.index)] = c
    data = TransitionData(alg, family, table)
    alg._cache[key] = data
    return data


def top_coefficient(alg: TwistedAlgebra, elt: GroupAlgElt, kind: str) -> RationalFn:
    """Coefficient of τ_{w0} when elt is expanded in the τ (kind) basis."""
    w0 = alg.W.longest
    return elt.coefficient(w0) / hecke_word(alg, kind, w0).coefficient(w0)
