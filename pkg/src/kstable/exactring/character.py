"""Rational points of the torus: values of e^{λ} and q^{1/2}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .ratfn import RationalFn


def _exact_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    n = len(rhs)
    a = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


@dataclass(frozen=True)
class CharacterAssignment:
    """A rational character τ of the torus together with a value of q.

    Values are given either on fundamental weights (``omega``) or on simple
    roots (``alpha``).  In the second case only root-lattice exponents can be
    evaluated.  ``sqrt_q`` is needed only for odd powers of q^{1/2}; it is
    derived from ``q`` when q is a rational square.
    """

    q: Fraction
    omega: tuple[Fraction, ...] | None = None
    alpha: tuple[Fraction, ...] | None = None
    cartan: tuple[tuple[int, ...], ...] | None = None
    sqrt_q: Fraction | None = None

    def __post_init__(self):
        if self.omega is None and self.alpha is None:
            raise ValueError("character needs omega or alpha values")
        for v in (self.omega or ()) + (self.alpha or ()):
            if v == 0:
                raise ValueError("character values must be nonzero")
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if self.sqrt_q is None:
            object.__setattr__(self, "sqrt_q", _exact_sqrt(Fraction(self.q)))
        elif self.sqrt_q ** 2 != self.q:
            raise ValueError("sqrt_q does not square to q")

    def q_power(self, qhalf: int) -> Fraction:
        if qhalf % 2 == 0:
            return Fraction(self.q) ** (qhalf // 2)
        if self.sqrt_q is None:
            raise ValueError(f"q={self.q} is not a rational square; q^(1/2) undefined")
        return self.sqrt_q ** qhalf

    def weight_value(self, weight: Sequence[int]) -> Fraction:
        if self.omega is not None:
            out = Fraction(1)
            for v, e in zip(self.omega, weight):
                out *= Fraction(v) ** e
            return out
        # weight = sum c_j alpha_j where alpha_j has coordinates cartan[j]
        transpose = [[self.cartan[j][i] for j in range(len(weight))] for i in range(len(weight))]
        coeffs = _solve(transpose, weight)
        out = Fraction(1)
        for v, c in zip(self.alpha, coeffs):
            if c.denominator != 1:
                raise ValueError(f"weight {tuple(weight)} is not in the root lattice")
            out *= Fraction(v) ** int(c)
        return out

    def monomial_value(self, qhalf: int, weight: Sequence[int]) -> Fraction:
        return self.q_power(qhalf) * self.weight_value(weight)

    def __call__(self, x: RationalFn) -> Fraction:
        return x.evaluate(self.monomial_value)

    def inverse(self) -> "CharacterAssignment":
        """τ^{-1}: every weight value inverted, q unchanged."""
        inv = lambda vals: None if vals is None else tuple(1 / Fraction(v) for v in vals)
        return CharacterAssignment(self.q, inv(self.omega), inv(self.alpha), self.cartan, self.sqrt_q)


def evaluate_character(x: RationalFn, tau: CharacterAssignment) -> Fraction:
    return tau(x)


def parse_character(text: str, cartan) -> CharacterAssignment:
    """Parse "alpha1=3/2,alpha2=5,q=9" (or omega<i>=..., sqrtq=...)."""
    rank = len(cartan)
    alpha: dict[int, Fraction] = {}
    omega: dict[int, Fraction] = {}
    q = sqrt_q = None
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ValueError(f"malformed character entry {item!r}")
        key, val = (s.strip() for s in item.split("=", 1))
        value = Fraction(val)
        if key == "q":
            q = value
        elif key == "sqrtq":
            sqrt_q = value
        elif key.startswith("alpha") and key[5:].isdigit():
            alpha[int(key[5:])] = value
        elif key.startswith("omega") and key[5:].isdigit():
            omega[int(key[5:])] = value
        else:
            raise ValueError(f"unknown character key {key!r}")
    if q is None and sqrt_q is not None:
        q = sqrt_q ** 2
    if q is None:
        raise ValueError("character needs a value for q")
    if alpha and omega:
        raise ValueError("give either alpha or omega values, not both")
    values = alpha or omega
    if sorted(values) != list(range(1, rank + 1)):
        raise ValueError(f"character needs values for indices 1..{rank}")
    vals = tuple(values[i] for i in range(1, rank + 1))
    cart = tuple(tuple(r) for r in cartan)
    if alpha:
        return CharacterAssignment(q, alpha=vals, cartan=cart, sqrt_q=sqrt_q)
    return CharacterAssignment(q, omega=vals, cartan=cart, sqrt_q=sqrt_q)
