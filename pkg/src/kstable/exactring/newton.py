"""Newton polytopes of Laurent polynomials with exact containment tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly

Point = tuple[Fraction, ...]


def _in_hull(x: Sequence[Fraction], pts: Sequence[Sequence[Fraction]]) -> bool:
    """Exact phase-one simplex: is x a convex combination of pts?"""
    if not pts:
        return False
    dim = len(x)
    # rows: coordinates and the sum-to-one constraint
    rows = []
    for i in range(dim):
        rows.append([Fraction(p[i]) for p in pts] + [Fraction(x[i])])
    rows.append([Fraction(1)] * len(pts) + [Fraction(1)])
    for r in rows:
        if r[-1] < 0:
            r[:] = [-v for v in r]
    m, n = len(rows), len(pts)
    # tableau with artificial columns n..n+m-1
    tab = [r[:-1] + [Fraction(int(i == j)) for j in range(m)] + [r[-1]] for i, r in enumerate(rows)]
    basis = [n + i for i in range(m)]
    ncols = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    while True:
        # reduced costs
        red = list(cost)
        for i, b in enumerate(basis):
            cb = cost[b]
            if cb:
                red = [a - cb * t for a, t in zip(red, tab[i])]
        entering = next((j for j in range(ncols) if red[j] < 0), None)
        if entering is None:
            break
        ratios = [(tab[i][-1] / tab[i][entering], basis[i], i)
                  for i in range(m) if tab[i][entering] > 0]
        if not ratios:
            break
        _, _, piv = min(ratios)
        pv = tab[piv][entering]
        tab[piv] = [v / pv for v in tab[piv]]
        for i in range(m):
            if i != piv and tab[i][entering]:
                f = tab[i][entering]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[piv])]
        basis[piv] = entering
    objective = sum(tab[i][-1] for i, b in enumerate(basis) if b >= n)
    return objective == 0


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points, stored by its vertices."""

    vertices: tuple[Point, ...]

    @classmethod
    def hull(cls, points) -> "Polytope":
        pts = sorted({tuple(Fraction(c) for c in p) for p in points})
        if not pts:
            raise ValueError("hull of no points")
        verts = [p for i, p in enumerate(pts) if not _in_hull(p, pts[:i] + pts[i + 1:])]
        return cls(tuple(verts))

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def translate(self, v: Sequence) -> "Polytope":
        shift = tuple(Fraction(c) for c in v)
        return Polytope(tuple(tuple(a + b for a, b in zip(p, shift)) for p in self.vertices))

    def contains_point(self, x: Sequence) -> bool:
        return _in_hull(tuple(Fraction(c) for c in x), self.vertices)

    def contains(self, other: "Polytope") -> bool:
        return all(self.contains_point(p) for p in other.vertices)

    def __str__(self) -> str:
        fmt = lambda p: "(" + ",".join(str(c) for c in p) + ")"
        return "conv{" + ", ".join(fmt(p) for p in self.vertices) + "}"


def newton_polygon(p: LaurentPoly) -> Polytope:
    """Hull of the weight exponents of p (q-exponents are ignored)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    return Polytope.hull(p.weights())
