"""The twisted group algebra Q_W = Q ⋊ Z[W] and its dual Q_W^*.

Elements of Q_W are stored as Σ p_w δ_w with coefficients on the left, so

    (p δ_w)(p' δ_v) = p · w(p') δ_{wv}.

Elements written with coefficients on the right (the push-pull elements) are
normalized on construction: δ_w p = w(p) δ_w.

Dual elements Σ c_w f_w multiply componentwise.  The action of Q_W on the
dual is (z∙f)(z') = f(z'z); on monomials it reads

    p δ_u ∙ f_v = (v u^{-1})(p) f_{v u^{-1}}.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .exactring import LaurentPoly, RationalFn, pack
from .rootdata import RootSystem, WeylElt, build_root_system


class TwistedAlgebra:
    """Scalar helpers and caches for one root system.

    Naming follows the usual conventions: ``x(β) = 1 - e^{-β}``,
    ``x_tilde(β) = q - e^{β}`` and ``x_hat(β) = 1 - q e^{-β}``.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.W = rs.weyl
        self.rank = rs.rank
        self.one = RationalFn.from_int(1, self.rank)
        self.zero = RationalFn.from_int(0, self.rank)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"TwistedAlgebra({self.rs.label})"

    # scalars
    def const(self, c: int) -> RationalFn:
        return RationalFn.from_int(c, self.rank)

    def e(self, weight: Sequence[int], qhalf: int = 0, coeff: int = 1) -> RationalFn:
        """coeff · q^{qhalf/2} e^{weight}."""
        if any(int(c) != c for c in weight):
            raise ValueError(f"weight {tuple(weight)} is not integral")
        return RationalFn.from_poly(LaurentPoly.monomial(tuple(int(c) for c in weight), qhalf, coeff))

    def qpow(self, halves: int) -> RationalFn:
        """q^{halves/2}."""
        return RationalFn.from_poly(LaurentPoly({pack(halves, (0,) * self.rank): 1}, self.rank))

    @cached_property
    def q(self) -> RationalFn:
        return self.qpow(2)

    def binomial(self, weight: Sequence[int], qhalf: int = 0) -> RationalFn:
        """1 - q^{qhalf/2} e^{weight}."""
        return RationalFn.from_poly(LaurentPoly.atom(pack(qhalf, tuple(weight)), self.rank))

    def inv_binomial(self, weight: Sequence[int], qhalf: int = 0) -> RationalFn:
        """1 / (1 - q^{qhalf/2} e^{weight})."""
        return RationalFn.inverse_atom(pack(qhalf, tuple(weight)), self.rank)

    def x(self, beta) -> RationalFn:
        return self.binomial(self.rs.neg(beta))

    def x_tilde(self, beta) -> RationalFn:
        return self.q - self.e(beta)

    def x_hat(self, beta) -> RationalFn:
        return self.binomial(self.rs.neg(beta), 2)

    def product(self, factors: Iterable[RationalFn]) -> RationalFn:
        out = self.one
        for f in factors:
            out = out * f
        return out

    def x_w(self, w: WeylElt, kind: str = "x", negate: bool = False) -> RationalFn:
        """Product over β ∈ Σ_w of x_β, tilde-x_β or hat-x_β (of -β if negate)."""
        key = ("xw", w.index, kind, negate)
        if key not in self._cache:
            fn = {"x": self.x, "tilde": self.x_tilde, "hat": self.x_hat}[kind]
            roots = self.W.inversion_set(w)
            self._cache[key] = self.product(fn(self.rs.neg(b) if negate else b) for b in roots)
        return self._cache[key]

    @cached_property
    def x_neg_w0(self) -> RationalFn:
        """x_{-w0} = ∏_{α>0} (1 - e^{α})."""
        return self.x_w(self.W.longest, "x", negate=True)

    @cached_property
    def x_hat_w0(self) -> RationalFn:
        """hat-x_{w0} = ∏_{α>0} (1 - q e^{-α})."""
        return self.x_w(self.W.longest, "hat")

    def act(self, w: WeylElt, p: RationalFn) -> RationalFn:
        """Weyl action on scalars, e^{λ} -> e^{wλ}."""
        if w.index == 0:
            return p
        return p.map_monomials(w.map_key)

    # basis elements
    def delta(self, w: WeylElt) -> "GroupAlgElt":
        return GroupAlgElt(self, {w: self.one})

    def scalar(self, p) -> "GroupAlgElt":
        p = RationalFn._coerce(p, self.rank)
        return GroupAlgElt(self, {self.W.identity: p} if not p.is_zero() else {})

    def element(self, coeffs: Mapping[WeylElt, RationalFn]) -> "GroupAlgElt":
        return GroupAlgElt(self, {w: p for w, p in coeffs.items() if not p.is_zero()})

    def f(self, w: WeylElt) -> "DualElt":
        return DualElt(self, {w: self.one})

    @cached_property
    def unit_dual(self) -> "DualElt":
        return DualElt(self, {w: self.one for w in self.W})

    def dual(self, coeffs: Mapping[WeylElt, RationalFn]) -> "DualElt":
        return DualElt(self, {w: p for w, p in coeffs.items() if not p.is_zero()})

    def fixed_point_class(self, w: WeylElt) -> "DualElt":
        """ι_{w*}1 = w(x_{-w0} hat-x_{w0}) f_w."""
        return DualElt(self, {w: self.act(w, self.x_neg_w0 * self.x_hat_w0)})


@lru_cache(maxsize=None)
def algebra_for(label: str) -> TwistedAlgebra:
    return TwistedAlgebra(build_root_system(label))


def _sum_into(acc: dict, key, value: RationalFn) -> None:
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def _ordered(coeffs: Mapping[WeylElt, RationalFn]) -> list[tuple[WeylElt, RationalFn]]:
    return sorted(coeffs.items(), key=lambda t: t[0].index)


class GroupAlgElt:
    """Σ p_w δ_w in Q_W."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: TwistedAlgebra, coeffs: dict[WeylElt, RationalFn]):
        self.alg = alg
        self.coeffs = coeffs

    def coefficient(self, w: WeylElt) -> RationalFn:
        return self.coeffs.get(w, self.alg.zero)

    def support(self) -> list[WeylElt]:
        return sorted(self.coeffs, key=lambda w: w.index)

    def _check(self, other: "GroupAlgElt") -> None:
        if other.alg.rs is not self.alg.rs:
            raise ValueError("elements over different root systems")

    def __add__(self, other):
        if not isinstance(other, GroupAlgElt):
            other = self.alg.scalar(other)
        self._check(other)
        out = dict(self.coeffs)
        for w, p in other.coeffs.items():
            _sum_into(out, w, p)
        return self.alg.element(out)

    __radd__ = __add__

    def __neg__(self) -> "GroupAlgElt":
        return GroupAlgElt(self.alg, {w: -p for w, p in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupAlgElt):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GroupAlgElt):
            return twisted_multiply(self, other)
        return twisted_multiply(self, self.alg.scalar(other))

    def __rmul__(self, other):
        # scalar on the left
        p = RationalFn._coerce(other, self.alg.rank)
        return self.alg.element({w: p * c for w, c in self.coeffs.items()})

    def equals(self, other) -> bool:
        if not isinstance(other, GroupAlgElt):
            other = self.alg.scalar(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(w).equals(other.coefficient(w)) for w in keys)

    __eq__ = equals
    __hash__ = None

    def act(self, w: WeylElt) -> "GroupAlgElt":
        """Apply w to every coefficient (not a ring map on Q_W; a helper)."""
        return GroupAlgElt(self.alg, {v: self.alg.act(w, p) for v, p in self.coeffs.items()})

    def map_coefficients(self, fn) -> "GroupAlgElt":
        return self.alg.element({w: fn(p) for w, p in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"[{p}]δ({w})" for w, p in _ordered(self.coeffs))

    def __repr__(self) -> str:
        return f"GroupAlgElt({self})"

    def to_json(self) -> list:
        return [[str(w), p.to_json()] for w, p in _ordered(self.coeffs)]


class DualElt:
    """Σ c_w f_w in Q_W^*."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: TwistedAlgebra, coeffs: dict[WeylElt, RationalFn]):
        self.alg = alg
        self.coeffs = coeffs

    def restrict(self, w: WeylElt) -> RationalFn:
        """The coefficient of f_w (the restriction to the fixed point w)."""
        return self.coeffs.get(w, self.alg.zero)

    __getitem__ = restrict

    def support(self) -> list[WeylElt]:
        return sorted(self.coeffs, key=lambda w: w.index)

    def __add__(self, other: "DualElt") -> "DualElt":
        out = dict(self.coeffs)
        for w, p in other.coeffs.items():
            _sum_into(out, w, p)
        return self.alg.dual(out)

    def __neg__(self) -> "DualElt":
        return DualElt(self.alg, {w: -p for w, p in self.coeffs.items()})

    def __sub__(self, other: "DualElt") -> "DualElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DualElt):
            return self.alg.dual({w: p * other.coeffs[w] for w, p in self.coeffs.items() if w in other.coeffs})
        p = RationalFn._coerce(other, self.alg.rank)
        return self.alg.dual({w: c * p for w, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __call__(self, z: GroupAlgElt) -> RationalFn:
        """Evaluate the functional: f(Σ p_w δ_w) = Σ p_w c_w."""
        out = self.alg.zero
        for w, p in z.coeffs.items():
            if w in self.coeffs:
                out = out + p * self.coeffs[w]
        return out

    def equals(self, other: "DualElt") -> bool:
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.restrict(w).equals(other.restrict(w)) for w in keys)

    __eq__ = equals
    __hash__ = None

    def map_coefficients(self, fn) -> "DualElt":
        return self.alg.dual({w: fn(p) for w, p in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"[{p}]f({w})" for w, p in _ordered(self.coeffs))

    def __repr__(self) -> str:
        return f"DualElt({self})"

    def to_json(self) -> list:
        return [[str(w), p.to_json()] for w, p in _ordered(self.coeffs)]


def twisted_multiply(z: GroupAlgElt, z2: GroupAlgElt) -> GroupAlgElt:
    z._check(z2)
    alg = z.alg
    W = alg.W
    out: dict[WeylElt, RationalFn] = {}
    for w, p in z.coeffs.items():
        for v, p2 in z2.coeffs.items():
            _sum_into(out, W.multiply(w, v), p * alg.act(w, p2))
    return alg.element(out)


def bullet_act(z: GroupAlgElt, f: DualElt) -> DualElt:
    """z∙f with p δ_u ∙ c f_v = c (v u^{-1})(p) f_{v u^{-1}}."""
    alg = z.alg
    W = alg.W
    out: dict[WeylElt, RationalFn] = {}
    for u, p in z.coeffs.items():
        uinv = W.inverse(u)
        for v, c in f.coeffs.items():
            y = W.multiply(v, uinv)
            _sum_into(out, y, c * alg.act(y, p))
    return alg.dual(out)


def simple_roots_of(alg: TwistedAlgebra, J: Iterable[int]) -> list:
    """Positive roots in the span of the simple roots indexed by J."""
    J = set(J)
    rs = alg.rs
    return [b for b, c in zip(rs.positive_roots, rs.positive_roots_simple)
            if all(c[i] == 0 for i in range(rs.rank) if i not in J)]


def push_pull_element(alg: TwistedAlgebra, J: Iterable[int], kind: str) -> GroupAlgElt:
    """Y_J, hat-Y_J, Y_{Π/J} or hat-Y_{Π/J}, in left normal form.

    ``kind`` is one of "Y", "hatY", "Y_rel", "hatY_rel".
    """
    J = frozenset(J)
    key = ("pushpull", J, kind)
    if key in alg._cache:
        return alg._cache[key]
    rs = alg.rs
    WJ, minimal, _ = alg.W.parabolic_data(J)
    sub = simple_roots_of(alg, J)
    if kind in ("Y", "hatY"):
        roots, elements = sub, WJ
    elif kind in ("Y_rel", "hatY_rel"):
        roots, elements = [b for b in rs.positive_roots if b not in sub], minimal
    else:
        raise ValueError(f"unknown push-pull kind {kind!r}")
    weight = alg.one
    for b in roots:
        weight = weight * alg.inv_binomial(b)
        if kind.startswith("hat"):
            weight = weight * alg.inv_binomial(rs.neg(b), 2)
    # δ_w p = w(p) δ_w
    result = alg.element({w: alg.act(w, weight) for w in elements})
    alg._cache[key] = result
    return result


def bullet_coefficient(z: GroupAlgElt, f: DualElt, y: WeylElt) -> RationalFn:
    """The f_y coefficient of z∙f, i.e. Σ_u c_{yu} · y(p_u)."""
    alg = z.alg
    W = alg.W
    out = alg.zero
    for u, p in z.coeffs.items():
        c = f.coeffs.get(W.multiply(y, u))
        if c is not None:
            out = out + c * alg.act(y, p)
    return out


def kpairing(f: DualElt, g: DualElt) -> RationalFn:
    """Coefficient of f_e in hat-Y_Π ∙ (f·g).

    hat-Y_Π ∙ F is always a multiple of the unit, so one coefficient suffices.
    """
    alg = f.alg
    return bullet_coefficient(push_pull_element(alg, range(alg.rank), "hatY"), f * g, alg.W.identity)


def localization_pairing(f: DualElt, g: DualElt) -> RationalFn:
    """Σ_w f|_w g|_w / ∏_{α>0} (1 - e^{wα})(1 - q e^{-wα})."""
    alg = f.alg
    out = alg.zero
    for w, c in (f * g).coeffs.items():
        den = alg.act(w, alg.x_neg_w0 * alg.x_hat_w0)
        out = out + c / den
    return out


def iota_involution(z: GroupAlgElt) -> GroupAlgElt:
    """ι(p δ_v) = δ_{v^{-1}} p v(X)/X with X = x_{-w0} hat-x_{w0}."""
    alg = z.alg
    X = alg.x_neg_w0 * alg.x_hat_w0
    out = {}
    for v, p in z.coeffs.items():
        vinv = alg.W.inverse(v)
        out[vinv] = alg.act(vinv, p) * X / alg.act(vinv, X)
    return alg.element(out)


def weyl_act_dual(w: WeylElt, F: DualElt) -> DualElt:
    """w(F)|_y = w(F|_{w^{-1}y})."""
    alg = F.alg
    W = alg.W
    return alg.dual({W.multiply(w, y): alg.act(w, c) for y, c in F.coeffs.items()})


def twist_line_bundle(F: DualElt, weight: Sequence[int]) -> DualElt:
    """F ⊗ O(λ): the coefficient at f_w gets multiplied by e^{wλ}."""
    alg = F.alg
    if not any(weight):
        return F
    return alg.dual({w: c * alg.e(w.act(weight)) for w, c in F.coeffs.items()})
