"""Root polynomials and their K coefficients.

For a reduced word (i_1, ..., i_l) of w the root polynomial is the product

    R_w = ∏_j (τ_{i_j} - (q-1)/y_{-β_j}),   β_j = s_{i_1}⋯s_{i_{j-1}} α_{i_j},

with y_λ = 1 - e^{-λ} in a second copy of the weight lattice (the y-variables)
that commutes with everything.  Expanding in the abstract Hecke algebra gives
R_w = Σ_v K_{v,w} τ_v with K_{v,w} rational in y alone.  The same K serves the
τ⁺ and τ⁻ families because both satisfy the same quadratic relation.

Two-variable functions live over a lattice of rank 2r: coordinates 0..r-1 are
y-exponents, r..2r-1 are x-exponents.  :func:`ev` sets y = x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exactring import LaurentPoly, RationalFn, pack, unpack
from .hecke import hecke_word
from .rootdata import WeylElt
from .twisted import GroupAlgElt, TwistedAlgebra


@lru_cache(maxsize=None)
def _ev_key(key: int, rank: int) -> int:
    qh, wt = unpack(key, 2 * rank)
    return pack(qh, tuple(a + b for a, b in zip(wt[:rank], wt[rank:])))


@lru_cache(maxsize=None)
def _x_key(key: int, rank: int) -> int:
    qh, wt = unpack(key, rank)
    return pack(qh, (0,) * rank + wt)


def ev(f: RationalFn, rank: int) -> RationalFn:
    """Substitute y_λ -> x_λ, landing in the rank-r ring."""
    return f.map_monomials(lambda k: _ev_key(k, rank), rank=rank)


def embed_x(f: RationalFn, rank: int) -> RationalFn:
    """Include a rank-r function as the x-part of the doubled lattice."""
    return f.map_monomials(lambda k: _x_key(k, rank), rank=2 * rank)


def x_degree_zero(f: RationalFn, rank: int) -> bool:
    """True when no x-exponent occurs in numerator or denominator."""
    keys = list(f.num.terms) + list(f.den)
    return all(not any(unpack(k, 2 * rank)[1][rank:]) for k in keys)


def y_binomial_inverse(weight: Sequence[int], rank: int) -> RationalFn:
    """1/(1 - e^{weight}) in the y-variables."""
    return RationalFn.inverse_atom(pack(0, tuple(weight) + (0,) * rank), 2 * rank)


@dataclass
class RootPolynomial:
    """R_w = Σ_v K_{v,w} τ_v with y-rational coefficients."""

    alg: TwistedAlgebra
    w: WeylElt
    word: tuple[int, ...]
    coeffs: dict[WeylElt, RationalFn] = field(default_factory=dict)

    def K(self, v: WeylElt) -> RationalFn:
        """K_{v,w} with y replaced by x (a rank-r function)."""
        c = self.coeffs.get(v)
        if c is None:
            return self.alg.zero
        return ev(c, self.alg.rank)

    def same_coefficients(self, other: "RootPolynomial") -> bool:
        keys = set(self.coeffs) | set(other.coeffs)
        zero = RationalFn.from_int(0, 2 * self.alg.rank)
        return all(self.coeffs.get(v, zero).equals(other.coeffs.get(v, zero)) for v in keys)


def _times_generator(alg: TwistedAlgebra, elt: dict, i: int, q: RationalFn) -> dict:
    """Right multiplication by τ_i in the abstract Hecke algebra."""
    out: dict[WeylElt, RationalFn] = {}
    for v, c in elt.items():
        vs = alg.W.right_mult(v, i)
        if vs.length > v.length:
            out[vs] = out[vs] + c if vs in out else c
        else:
            qc = q * c
            out[vs] = out[vs] + qc if vs in out else qc
            rest = (q - 1) * c
            out[v] = out[v] + rest if v in out else rest
    return {v: c for v, c in out.items() if not c.is_zero()}


def root_polynomial(alg: TwistedAlgebra, w: WeylElt, word: Sequence[int] | None = None) -> RootPolynomial:
    W = alg.W
    if word is None:
        word = w.word
    word = tuple(word)
    if not W.is_reduced_word(word) or W.from_word(word) != w:
        raise ValueError(f"{word} is not a reduced word for {w}")
    key = ("rootpoly", w.index, word)
    if key in alg._cache:
        return alg._cache[key]
    r = alg.rank
    q = RationalFn.from_poly(LaurentPoly({pack(2, (0,) * (2 * r)): 1}, 2 * r))
    elt = {W.identity: RationalFn.from_int(1, 2 * r)}
    prefix = W.identity
    for i in word:
        beta = prefix.act(alg.rs.simple_roots[i])
        # h_i(β) = τ_i - (q-1)/y_{-β},  y_{-β} = 1 - e^{β}
        c = (q - 1) * y_binomial_inverse(beta, r)
        shifted = _times_generator(alg, elt, i, q)
        for v, p in elt.items():
            val = shifted.get(v, None)
            shifted[v] = (val - c * p) if val is not None else -(c * p)
        elt = {v: p for v, p in shifted.items() if not p.is_zero()}
        prefix = W.right_mult(prefix, i)
    rp = RootPolynomial(alg, w, word, elt)
    alg._cache[key] = rp
    return rp


def k_table(alg: TwistedAlgebra) -> dict[tuple[WeylElt, WeylElt], RationalFn]:
    """K_{v,w}(y -> x) for all v ≤ w, keyed by (v, w)."""
    key = ("ktable",)
    if key not in alg._cache:
        table = {}
        for w in alg.W:
            rp = root_polynomial(alg, w)
            for v in rp.coeffs:
                table[(v, w)] = rp.K(v)
        alg._cache[key] = table
    return alg._cache[key]


def k_coefficient(alg: TwistedAlgebra, v: WeylElt, w: WeylElt) -> RationalFn:
    return k_table(alg).get((v, w), alg.zero)


def ev_root_polynomial(rp: RootPolynomial, family: str = "tau+") -> GroupAlgElt:
    """ev(R_w) expanded in the δ basis, using τ⁺ or τ⁻ for the x-part."""
    alg = rp.alg
    out = alg.element({})
    for v in rp.coeffs:
        out = out + rp.K(v) * hecke_word(alg, family, v)
    return out


def word_sample(alg: TwistedAlgebra, w: WeylElt, rng: random.Random, limit: int = 12, samples: int = 3) -> list[tuple[int, ...]]:
    """All reduced words of w when there are at most ``limit``, else a random few."""
    words = alg.W.reduced_words(w)
    if len(words) <= limit:
        return words
    return sorted(rng.sample(words, samples))
