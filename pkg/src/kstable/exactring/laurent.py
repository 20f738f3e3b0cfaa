"""Sparse Laurent polynomials in q^{1/2} and the weight lattice.

A monomial q^{k/2} e^{λ} is stored under a single integer key.  The exponent
vector (k, λ) is written in a balanced radix-2^20 expansion with λ_1 as the
most significant digit and k as the least significant one::

    key = ((λ_1·B + λ_2)·B + ... + λ_r)·B + k,    B = 2^20

The encoding is additive, so multiplying monomials is adding keys, and the
integer order on keys is lexicographic in (λ_1, ..., λ_r, k).  In particular
``key > 0`` exactly when the first nonzero weight coordinate is positive, or
the weight is zero and the q-exponent is positive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

_BITS = 20
_BASE = 1 << _BITS
_MASK = _BASE - 1
_HALF = _BASE >> 1

_decode_cache: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}


def _low_digit(key: int) -> int:
    return ((key + _HALF) & _MASK) - _HALF


def pack(qhalf: int, weight: Sequence[int]) -> int:
    """Encode q^{qhalf/2} e^{weight} as an integer key."""
    key = 0
    for c in weight:
        if not -_HALF < c < _HALF:
            raise OverflowError(f"weight coordinate {c} out of range")
        key = key * _BASE + c
    if not -_HALF < qhalf < _HALF:
        raise OverflowError(f"q exponent {qhalf} out of range")
    return key * _BASE + qhalf


def unpack(key: int, rank: int) -> tuple[int, tuple[int, ...]]:
    """Inverse of :func:`pack` for a lattice of the given rank."""
    hit = _decode_cache.get((key, rank))
    if hit is not None:
        return hit
    k = key
    qhalf = _low_digit(k)
    k = (k - qhalf) >> _BITS
    digits = []
    for _ in range(rank):
        d = _low_digit(k)
        digits.append(d)
        k = (k - d) >> _BITS
    if k != 0:
        raise ValueError(f"key {key} does not decode in rank {rank}")
    digits.reverse()
    out = (qhalf, tuple(digits))
    if len(_decode_cache) < 2_000_000:
        _decode_cache[(key, rank)] = out
    return out


def q_digit(key: int) -> int:
    return _low_digit(key)


def weight_part(key: int) -> int:
    """Key of the weight part alone (the q-exponent set to zero)."""
    return key - _low_digit(key)


def _fmt_half(k: int) -> str:
    if k % 2 == 0:
        return str(k // 2)
    return f"{k}/2"


def format_monomial(qhalf: int, weight: Sequence[int]) -> str:
    parts = []
    if qhalf:
        parts.append("q" if qhalf == 2 else "q^{" + _fmt_half(qhalf) + "}")
    if any(weight):
        expo = ""
        for i, c in enumerate(weight, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if expo else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            expo += f"{sign}{mag}w{i}"
        parts.append("e^{" + expo + "}")
    return "".join(parts)


class LaurentPoly:
    """Element of Z[q^{±1/2}][Λ] for a weight lattice Λ of fixed rank.

    ``terms`` maps packed keys to nonzero integers.  Instances are treated as
    immutable; every operation returns a new polynomial.
    """

    __slots__ = ("terms", "rank")

    def __init__(self, terms: dict[int, int] | None = None, rank: int = 0):
        self.terms = terms if terms is not None else {}
        self.rank = rank

    # construction
    @classmethod
    def constant(cls, c: int, rank: int = 0) -> "LaurentPoly":
        return cls({0: c} if c else {}, rank)

    @classmethod
    def monomial(cls, weight: Sequence[int], qhalf: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({pack(qhalf, weight): coeff} if coeff else {}, len(weight))

    @classmethod
    def from_key(cls, key: int, rank: int, coeff: int = 1) -> "LaurentPoly":
        return cls({key: coeff} if coeff else {}, rank)

    @classmethod
    def from_terms(cls, triples: Iterable[tuple[int, Sequence[int], int]], rank: int) -> "LaurentPoly":
        terms: dict[int, int] = {}
        for qhalf, weight, coeff in triples:
            if len(weight) != rank:
                raise ValueError("weight of wrong rank")
            k = pack(qhalf, weight)
            terms[k] = terms.get(k, 0) + coeff
        return cls({k: c for k, c in terms.items() if c}, rank)

    @staticmethod
    def atom(key: int, rank: int) -> "LaurentPoly":
        """The binomial 1 - m for the monomial with the given key."""
        if key == 0:
            raise ZeroDivisionError("the atom 1 - 1 is zero")
        return LaurentPoly({0: 1, key: -1}, rank)

    # basic predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _rank_with(self, other: "LaurentPoly") -> int:
        if self.rank == other.rank or not other.rank:
            return self.rank
        if not self.rank:
            return other.rank
        raise ValueError(f"rank mismatch {self.rank} vs {other.rank}")

    # ring operations
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        rank = self._rank_with(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(out, rank)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        rank = self._rank_with(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(out, rank)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly({}, self.rank)
            return LaurentPoly({k: c * other for k, c in self.terms.items()}, self.rank)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        rank = self._rank_with(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((kb, cb),) = b.items()
            return LaurentPoly({k + kb: c * cb for k, c in a.items()}, rank)
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly({k: c for k, c in out.items() if c}, rank)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((k, c),) = self.terms.items()
            if abs(c) != 1:
                raise ValueError("negative powers only for unit monomials")
            return LaurentPoly({-k * (-n): c ** (-n)}, self.rank)
        result = LaurentPoly({0: 1}, self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, key: int, coeff: int = 1) -> "LaurentPoly":
        """Multiply by the monomial ``coeff * m`` where m has the given key."""
        return LaurentPoly({k + key: c * coeff for k, c in self.terms.items()}, self.rank)

    def scale_exact(self, d: int) -> "LaurentPoly":
        return LaurentPoly({k: c // d for k, c in self.terms.items()}, self.rank)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    # substitutions
    def map_keys(self, fn: Callable[[int], int]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for k, c in self.terms.items():
            k2 = fn(k)
            s = out.get(k2, 0) + c
            if s:
                out[k2] = s
            else:
                out.pop(k2, None)
        return LaurentPoly(out, self.rank)

    def invert_q(self) -> "LaurentPoly":
        """Substitute q^{1/2} -> q^{-1/2}."""
        return self.map_keys(lambda k: k - 2 * _low_digit(k))

    def invert_weights(self) -> "LaurentPoly":
        """Substitute e^{λ} -> e^{-λ}, leaving q alone."""
        return self.map_keys(lambda k: 2 * _low_digit(k) - k)

    # inspection
    def items(self) -> list[tuple[int, tuple[int, ...], int]]:
        """Sorted (q-half exponent, weight, coefficient) triples."""
        rank = self.rank
        out = []
        for k, c in self.terms.items():
            qh, wt = unpack(k, rank)
            out.append((qh, wt, c))
        out.sort(key=lambda t: (t[1], t[0]))
        return out

    def weights(self) -> set[tuple[int, ...]]:
        return {unpack(k, self.rank)[1] for k in self.terms}

    def evaluate(self, monomial_value: Callable[[int, tuple[int, ...]], Fraction]) -> Fraction:
        total = Fraction(0)
        for qh, wt, c in self.items():
            total += c * monomial_value(qh, wt)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for qh, wt, c in self.items():
            mono = format_monomial(qh, wt)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            if c < 0:
                out += "-" + body
            else:
                out += ("+" if out else "") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # division
    def divide_atom(self, key: int) -> "LaurentPoly | None":
        """Exact quotient by 1 - m (m the monomial with this key), or None.

        Z[Λ]/(1 - m) is the group ring of Λ/⟨m⟩, so p is divisible iff the
        coefficients summed over every coset of ⟨m⟩ vanish.  Along a coset the
        quotient coefficients are prefix sums.
        """
        if key == 0:
            raise ZeroDivisionError("the atom 1 - 1 is zero")
        if not self.terms:
            return self
        # pivot digit: position and value of a nonzero digit of the key
        rank = self.rank
        qm, wm = unpack(key, rank)
        vec_m = (qm,) + wm
        piv = next(i for i, d in enumerate(vec_m) if d)
        pv = vec_m[piv]
        cosets: dict[int, list[tuple[int, int]]] = {}
        for k, c in self.terms.items():
            qh, wt = unpack(k, rank)
            d = qh if piv == 0 else wt[piv - 1]
            t = d // pv
            rep = k - t * key
            cosets.setdefault(rep, []).append((t, c))
        out: dict[int, int] = {}
        for rep, chain in cosets.items():
            if sum(c for _, c in chain) != 0:
                return None
            chain.sort()
            run = 0
            prev = None
            for t, c in chain:
                if prev is not None and run:
                    for s in range(prev + 1, t):
                        out[rep + s * key] = run
                run += c
                if run:
                    out[rep + t * key] = run
                prev = t
        return LaurentPoly(out, rank)

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient self / other in the Laurent ring, or None.

        Uses the lexicographic group order on keys: the leading term of the
        remainder must be the leading term of other times a quotient term, and
        every quotient key is bounded below by min(self) - min(other).
        """
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        rank = self._rank_with(other)
        if len(other.terms) == 1:
            ((kd, cd),) = other.terms.items()
            if any(c % cd for c in self.terms.values()):
                return None
            return LaurentPoly({k - kd: c // cd for k, c in self.terms.items()}, rank)
        if len(other.terms) == 2 and other.terms.get(0) in (1, -1):
            (ko,) = [k for k in other.terms if k != 0]
            if other.terms[0] == -other.terms[ko]:
                q = self.divide_atom(ko)
                return None if q is None else q * other.terms[0]
        lead_d = max(other.terms)
        lead_c = other.terms[lead_d]
        floor = min(self.terms) - min(other.terms)
        rem = dict(self.terms)
        quot: dict[int, int] = {}
        dterms = list(other.terms.items())
        while rem:
            lk = max(rem)
            lc = rem[lk]
            qk = lk - lead_d
            if qk < floor or lc % lead_c:
                return None
            qc = lc // lead_c
            quot[qk] = qc
            for k, c in dterms:
                kk = k + qk
                s = rem.get(kk, 0) - qc * c
                if s:
                    rem[kk] = s
                else:
                    rem.pop(kk, None)
        return LaurentPoly(quot, rank)

    # serialization
    def to_triples(self) -> list[list]:
        return [[qh, list(wt), c] for qh, wt, c in self.items()]

    @classmethod
    def from_triples(cls, data, rank: int) -> "LaurentPoly":
        return cls.from_terms(((qh, tuple(wt), c) for qh, wt, c in data), rank)


def orient(key: int) -> tuple[int, int, int]:
    """Normalize the atom 1 - m.

    Returns (oriented_key, unit_key, sign) with
    1 - m = sign * m_unit * (1 - m_oriented) and oriented_key > 0.
    """
    if key > 0:
        return key, 0, 1
    # 1 - m = -m (1 - m^{-1})
    return -key, key, -1
