"""Fractions over the Laurent ring with denominators factored into atoms.

Every denominator met in this package is a product of binomials 1 - q^j e^μ,
so a fraction is stored as

    num / (dconst · ∏ (1 - m)^k)

with each atom oriented (key > 0, see :func:`laurent.orient`).  There is no
gcd: after every operation each denominator atom is trial-divided out of the
numerator when possible, which keeps expressions small but is not a canonical
form.  Equality is decided by cross-multiplication.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

from .laurent import LaurentPoly, orient, unpack

# atoms known to the factorizer used by division; root systems register theirs
_ATOM_REGISTRY: set[int] = set()


def register_atoms(keys: Iterable[int]) -> None:
    for k in keys:
        _ATOM_REGISTRY.add(orient(k)[0])


class SingularCharacter(ZeroDivisionError):
    """A denominator atom vanishes at the chosen character."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class RationalFn:
    __slots__ = ("num", "den", "dconst")

    def __init__(self, num: LaurentPoly, den: dict[int, int] | None = None, dconst: int = 1):
        self.num = num
        self.den = den if den is not None else {}
        self.dconst = dconst

    @property
    def rank(self) -> int:
        return self.num.rank

    # construction
    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p, {}, 1)

    @classmethod
    def from_int(cls, c: int, rank: int = 0) -> "RationalFn":
        return cls(LaurentPoly.constant(c, rank), {}, 1)

    @classmethod
    def inverse_atom(cls, key: int, rank: int) -> "RationalFn":
        """1 / (1 - m) for the monomial m with this key."""
        if key == 0:
            raise ZeroDivisionError("the atom 1 - 1 is zero")
        ok, unit, sign = orient(key)
        # 1/(1-m) = sign * m_unit^{-1} / (1 - m_ok)
        return cls(LaurentPoly.from_key(-unit, rank, sign), {ok: 1}, 1)

    @staticmethod
    def _normalized(num: LaurentPoly, den: dict[int, int], dconst: int, reduce: bool = True) -> "RationalFn":
        if num.is_zero():
            return RationalFn(num, {}, 1)
        if reduce and den:
            den = dict(den)
            for a in sorted(den):
                while den[a]:
                    q = num.divide_atom(a)
                    if q is None:
                        break
                    num = q
                    den[a] -= 1
                if not den[a]:
                    del den[a]
        if dconst != 1:
            g = gcd(num.content(), dconst)
            if g != 1:
                num = num.scale_exact(g)
                dconst //= g
        return RationalFn(num, den, dconst)

    def _expand_den(self, atoms: dict[int, int]) -> LaurentPoly:
        out = LaurentPoly.constant(1, self.rank)
        for a in sorted(atoms):
            for _ in range(atoms[a]):
                out = out * LaurentPoly.atom(a, self.rank)
        return out

    def den_poly(self) -> LaurentPoly:
        return self._expand_den(self.den) * self.dconst

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.den and self.dconst == 1

    def to_poly(self) -> LaurentPoly:
        """The Laurent polynomial equal to self, or ValueError."""
        r = self._normalized(self.num, self.den, self.dconst)
        if r.den or r.dconst != 1:
            raise ValueError(f"not a Laurent polynomial: {self}")
        return r.num

    # arithmetic
    @staticmethod
    def _coerce(x, rank: int) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, LaurentPoly):
            return RationalFn(x, {}, 1)
        if isinstance(x, int):
            return RationalFn(LaurentPoly.constant(x, rank), {}, 1)
        raise TypeError(f"cannot coerce {type(x).__name__}")

    def _combine(self, other: "RationalFn", sign: int, reduce: bool = True) -> "RationalFn":
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other if sign > 0 else -other
        den = dict(self.den)
        for a, k in other.den.items():
            if den.get(a, 0) < k:
                den[a] = k
        dconst = _lcm(self.dconst, other.dconst)
        left = self.num * (dconst // self.dconst)
        missing = {a: k - self.den.get(a, 0) for a, k in den.items() if k > self.den.get(a, 0)}
        if missing:
            left = left * self._expand_den(missing)
        right = other.num * (sign * (dconst // other.dconst))
        missing = {a: k - other.den.get(a, 0) for a, k in den.items() if k > other.den.get(a, 0)}
        if missing:
            right = right * self._expand_den(missing)
        return self._normalized(left + right, den, dconst, reduce)

    def __add__(self, other):
        try:
            other = self._coerce(other, self.rank)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other, self.rank)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, self.dconst)

    def __mul__(self, other):
        try:
            other = self._coerce(other, self.rank)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFn(LaurentPoly({}, max(self.rank, other.rank)), {}, 1)
        num = self.num * other.num
        if not other.den:
            den = self.den
        elif not self.den:
            den = other.den
        else:
            den = dict(self.den)
            for a, k in other.den.items():
                den[a] = den.get(a, 0) + k
        # only atoms that were new to one factor can cancel
        return self._normalized(num, den, self.dconst * other.dconst,
                                reduce=bool(self.den) or bool(other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        c, unit, atoms = factor_atoms(self.num)
        num = self._expand_den(self.den) * self.dconst
        num = num.shift(-unit)
        den = dict(atoms)
        if c < 0:
            num, c = -num, -c
        return self._normalized(num, den, c)

    def __truediv__(self, other):
        try:
            other = self._coerce(other, self.rank)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other, self.rank) * self.inverse()

    def __pow__(self, n: int) -> "RationalFn":
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFn.from_int(1, self.rank)
        for _ in range(n):
            out = out * self
        return out

    # equality
    def equals(self, other) -> bool:
        """Cross-multiplication equality (after cancelling shared atoms)."""
        other = self._coerce(other, self.rank)
        return self._combine(other, -1, reduce=False).num.is_zero()

    def __eq__(self, other) -> bool:
        try:
            return self.equals(other)
        except TypeError:
            return NotImplemented

    __hash__ = None  # equality is not structural

    # substitutions
    def map_monomials(self, fn: Callable[[int], int], rank: int | None = None) -> "RationalFn":
        """Apply an additive map on keys (a lattice homomorphism fixing 0).

        ``rank`` changes the rank of the target lattice; the map must then send
        no denominator atom to the trivial monomial.
        """
        num = self.num.map_keys(fn)
        if rank is not None:
            num = LaurentPoly(num.terms, rank)
        den: dict[int, int] = {}
        for a, k in self.den.items():
            image = fn(a)
            if image == 0:
                raise ZeroDivisionError("substitution sends a denominator atom to zero")
            ok, unit, sign = orient(image)
            den[ok] = den.get(ok, 0) + k
            # 1/(1-m) = sign * m_unit^{-1} / (1 - m_ok)
            num = num.shift(-unit * k, sign ** k)
        return RationalFn(num, den, self.dconst)

    def invert_q(self) -> "RationalFn":
        from .laurent import q_digit
        return self.map_monomials(lambda k: k - 2 * q_digit(k))

    def invert_weights(self) -> "RationalFn":
        from .laurent import q_digit
        return self.map_monomials(lambda k: 2 * q_digit(k) - k)

    # evaluation
    def evaluate(self, monomial_value: Callable[[int, tuple[int, ...]], Fraction]) -> Fraction:
        rank = self.rank
        den = Fraction(self.dconst)
        for a in sorted(self.den):
            qh, wt = unpack(a, rank)
            v = 1 - monomial_value(qh, wt)
            if v == 0:
                mono = LaurentPoly.from_key(a, rank)
                raise SingularCharacter(f"atom 1-{mono} vanishes at the character")
            den *= v ** self.den[a]
        return self.num.evaluate(monomial_value) / den

    def __str__(self) -> str:
        if not self.den and self.dconst == 1:
            return str(self.num)
        parts = [] if self.dconst == 1 else [str(self.dconst)]
        for a in sorted(self.den):
            atom = "(" + str(LaurentPoly.atom(a, self.rank)) + ")"
            parts.append(atom if self.den[a] == 1 else f"{atom}^{self.den[a]}")
        den = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
        return f"({self.num})/{den}"

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def to_json(self) -> dict:
        return {
            "num": self.num.to_triples(),
            "den": self.den_poly().to_triples(),
        }


def factor_atoms(p: LaurentPoly) -> tuple[int, int, dict[int, int]]:
    """Write p = c · m · ∏ (1 - a)^k over registered or self-evident atoms.

    Returns (c, key of m, atoms).  Raises ValueError when a factor that is
    not a binomial atom remains.
    """
    if p.is_zero():
        raise ZeroDivisionError("zero has no factorization")
    rank = p.rank
    atoms: dict[int, int] = {}
    c = p.content()
    if min(p.terms.values()) < 0 and max(p.terms.values()) < 0:
        c = -c
    rest = p.scale_exact(c)
    found = _split_atoms(rest, _registry_by_size(rank, len(_ATOM_REGISTRY)), 0)
    if found is None:
        raise ValueError(f"cannot factor {p} into binomial atoms")
    unit_poly, split = found
    for a in split:
        atoms[a] = atoms.get(a, 0) + 1
    ((unit, cu),) = unit_poly.terms.items()
    return c * cu, unit, atoms


@lru_cache(maxsize=64)
def _registry_by_size(rank: int, generation: int) -> list[int]:
    """Registered atoms of this rank, largest weight first, so 1 - m^2 is tried before 1 - m."""
    sized = []
    for a in _ATOM_REGISTRY:
        try:
            qh, wt = unpack(a, rank)
        except ValueError:  # registered by a system of another rank
            continue
        sized.append(((-sum(abs(x) for x in wt), -abs(qh), a), a))
    return [a for _, a in sorted(sized)]


def _split_atoms(rest: LaurentPoly, registry: list[int], start: int) -> tuple[LaurentPoly, list[int]] | None:
    """Depth-first search for rest = monomial · ∏ atoms (atoms in registry order from start)."""
    rank = rest.rank
    if len(rest) == 1:
        return rest, []
    if len(rest) == 2:
        (k1, c1), (k2, c2) = sorted(rest.terms.items())
        if c1 == -c2:
            ok, unit, sign = orient(k2 - k1)
            return LaurentPoly.from_key(k1 + unit, rank, c1 * sign), [ok]
    for j in range(start, len(registry)):
        q = rest.divide_atom(registry[j])
        if q is None:
            continue
        found = _split_atoms(q, registry, j)
        if found is not None:
            return found[0], [registry[j]] + found[1]
    return None


def probably_equal(a: RationalFn, b: RationalFn, rng: random.Random, trials: int = 3) -> bool:
    """Cheap test at random rational points; a False answer is certain."""
    rank = max(a.rank, b.rank)
    for _ in range(trials):
        vals = [Fraction(rng.randint(2, 97), rng.randint(1, 13)) for _ in range(rank)]
        sq = Fraction(rng.randint(2, 97), rng.randint(1, 13))

        def mono(qh, wt, vals=vals, sq=sq):
            out = sq ** qh
            for v, e in zip(vals, wt):
                out *= v ** e
            return out

        try:
            if a.evaluate(mono) != b.evaluate(mono):
                return False
        except SingularCharacter:
            continue
    return True
