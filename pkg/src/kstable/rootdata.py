"""Finite root systems and their Weyl groups.

Weights live in fundamental-weight coordinates.  With the convention
``cartan[i][j] = <α_i, α_j^∨>`` the simple root α_i has coordinates equal to
row i of the Cartan matrix, and <λ, α_i^∨> is simply the i-th coordinate of λ.

>>> A2 = build_root_system("A2")
>>> len(A2.positive_roots), A2.weyl.order
(3, 6)
>>> str(A2.weyl.longest)
'1 2 1'
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exactring.laurent import pack, unpack
from .exactring.ratfn import register_atoms

Vec = tuple[int, ...]


class CartanError(ValueError):
    pass


def cartan_matrix(label: str) -> list[list[int]]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not m:
        raise CartanError(f"unrecognized Cartan type {label!r}")
    kind, n = m.group(1).upper(), int(m.group(2))
    valid = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4, "G": n == 2, "F": n == 4}
    if not valid.get(kind, False):
        raise CartanError(f"unsupported Cartan type {label!r}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind == "G":
        return [[2, -1], [-3, 2]]
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    if kind == "B":
        c[n - 2][n - 1] = -2
    elif kind == "C":
        c[n - 1][n - 2] = -2
    elif kind == "F":
        c[1][2] = -2
    elif kind == "D":
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    return c


def _det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n, det = len(a), Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def validate_cartan(c: Sequence[Sequence[int]]) -> None:
    """Raise CartanError naming the first violated finite-type condition."""
    n = len(c)
    if n == 0 or any(len(r) != n for r in c):
        raise CartanError("Cartan matrix must be square and nonempty")
    for i in range(n):
        if c[i][i] != 2:
            raise CartanError(f"diagonal entry ({i + 1},{i + 1}) is {c[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if c[i][j] > 0:
                raise CartanError(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
            if (c[i][j] == 0) != (c[j][i] == 0):
                raise CartanError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must vanish together")
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            minor = _det([[Fraction(c[i][j]) for j in idx] for i in idx])
            if minor <= 0:
                where = ",".join(str(i + 1) for i in idx)
                raise CartanError(f"not of finite type: principal minor on {{{where}}} is {minor} <= 0")


class RootSystem:
    """Root datum of a finite Weyl group in fundamental-weight coordinates."""

    def __init__(self, cartan: Sequence[Sequence[int]], label: str | None = None):
        validate_cartan(cartan)
        self.cartan: tuple[Vec, ...] = tuple(tuple(int(x) for x in r) for r in cartan)
        self.rank = len(self.cartan)
        self.label = label or "custom"
        self.simple_roots: tuple[Vec, ...] = self.cartan
        self.rho: Vec = (1,) * self.rank
        self._enumerate_roots()
        register_atoms(self._atom_keys())

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    def _enumerate_roots(self) -> None:
        n = self.rank
        # roots in simple-root coordinates, closed under simple reflections
        seen: set[Vec] = set()
        todo = deque(tuple(int(i == j) for j in range(n)) for i in range(n))
        while todo:
            b = todo.popleft()
            if b in seen:
                continue
            seen.add(b)
            if len(seen) > 10_000:
                raise CartanError("root enumeration does not terminate")
            for i in range(n):
                pair = sum(b[j] * self.cartan[j][i] for j in range(n))
                nb = tuple(b[j] - (pair if j == i else 0) for j in range(n))
                if nb not in seen:
                    todo.append(nb)
        pos = sorted((b for b in seen if all(x >= 0 for x in b)), key=lambda b: (sum(b), b))
        self.positive_roots_simple: tuple[Vec, ...] = tuple(pos)
        self.positive_roots: tuple[Vec, ...] = tuple(self.from_simple_coords(b) for b in pos)
        self._positive_set = frozenset(self.positive_roots)
        self.roots = self.positive_roots + tuple(self.neg(b) for b in self.positive_roots)

    def _atom_keys(self) -> Iterable[int]:
        for b in self.positive_roots:
            for j in range(-2, 3):
                yield pack(2 * j, b)
                yield pack(2 * j, self.neg(b))
        for j in (1, 2):
            yield pack(2 * j, (0,) * self.rank)

    # weight arithmetic
    def from_simple_coords(self, c: Sequence[int]) -> Vec:
        n = self.rank
        return tuple(sum(c[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def to_simple_coords(self, weight: Sequence) -> tuple[Fraction, ...]:
        n = self.rank
        a = [[Fraction(self.cartan[j][i]) for j in range(n)] + [Fraction(weight[i])] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col] != 0)
            a[col], a[piv] = a[piv], a[col]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col] / a[col][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return tuple(a[i][n] / a[i][i] for i in range(n))

    @staticmethod
    def neg(v: Sequence) -> tuple:
        return tuple(-x for x in v)

    @staticmethod
    def add(u: Sequence, v: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(u, v))

    def is_positive_root(self, b: Sequence) -> bool:
        return tuple(b) in self._positive_set

    def is_root(self, b: Sequence) -> bool:
        b = tuple(b)
        return b in self._positive_set or self.neg(b) in self._positive_set

    def reflect_weight(self, i: int, weight: Sequence) -> tuple:
        """s_i(λ) = λ - <λ, α_i^∨> α_i for a 0-based simple index i."""
        c = weight[i]
        return tuple(w - c * a for w, a in zip(weight, self.simple_roots[i]))

    @cached_property
    def root_lengths(self) -> tuple[Fraction, ...]:
        """Squared lengths |α_i|² of simple roots, normalized so the shortest is 1."""
        n = self.rank
        d: list[Fraction | None] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            todo = [start]
            while todo:
                i = todo.pop()
                for j in range(n):
                    if j != i and self.cartan[i][j] and d[j] is None:
                        # <α_i,α_j^∨>|α_j|² = <α_j,α_i^∨>|α_i|²
                        d[j] = d[i] * self.cartan[j][i] / self.cartan[i][j]
                        todo.append(j)
        m = min(d)
        return tuple(x / m for x in d)

    def norm_sq(self, root: Sequence[int]) -> Fraction:
        b = self.to_simple_coords(root)
        d = self.root_lengths
        n = self.rank
        # (α_i, α_j) = <α_i, α_j^∨> |α_j|² / 2
        return sum(b[i] * b[j] * self.cartan[i][j] * d[j] / 2 for i in range(n) for j in range(n))

    def coroot_pairing_vector(self, root: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates c with <λ, β^∨> = Σ c_i λ_i."""
        b = self.to_simple_coords(root)
        d = self.root_lengths
        norm = self.norm_sq(root)
        return tuple(b[j] * d[j] / norm for j in range(self.rank))

    def coroot_pairing(self, weight: Sequence, root: Sequence[int]):
        c = self.coroot_pairing_vector(root)
        val = sum(ci * w for ci, w in zip(c, weight))
        return int(val) if Fraction(val).denominator == 1 else val

    @cached_property
    def dual_system(self) -> "RootSystem":
        t = [[self.cartan[j][i] for j in range(self.rank)] for i in range(self.rank)]
        return RootSystem(t, label=f"{self.label}^dual")

    @cached_property
    def weyl(self) -> "WeylGroup":
        return WeylGroup(self)


def build_root_system(cartan_type) -> RootSystem:
    """Root system from a type label like "B2" or an explicit Cartan matrix."""
    if isinstance(cartan_type, str):
        return RootSystem(cartan_matrix(cartan_type), label=cartan_type.strip().upper())
    return RootSystem(cartan_type)


def read_cartan_file(path) -> list[list[int]]:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append([int(x) for x in line.replace(",", " ").split()])
    return rows


class WeylElt:
    """Element of a precomputed Weyl group.  Compare with ``==``; order with bruhat_leq."""

    __slots__ = ("group", "index", "word", "matrix", "_key_images", "_key_cache")

    def __init__(self, group: "WeylGroup", index: int, word: tuple[int, ...], matrix: tuple[Vec, ...]):
        self.group = group
        self.index = index
        self.word = word
        self.matrix = matrix
        rank = len(matrix)
        # images of basis weights as keys, for acting on packed monomials
        self._key_images = tuple(pack(0, tuple(matrix[i][j] for i in range(rank))) for j in range(rank))
        self._key_cache: dict[int, int] = {}

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElt) and other.group is self.group and other.index == self.index

    def __hash__(self) -> int:
        return self.index

    def __lt__(self, other: "WeylElt") -> bool:
        # ShortLex order; only used for deterministic sorting
        return self.index < other.index

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.multiply(self, other)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def __str__(self) -> str:
        return " ".join(str(i + 1) for i in self.word) if self.word else "e"

    def __repr__(self) -> str:
        return f"WeylElt({self})"

    def act(self, weight: Sequence) -> tuple:
        m = self.matrix
        return tuple(sum(m[i][j] * weight[j] for j in range(len(weight))) for i in range(len(m)))

    def map_key(self, key: int) -> int:
        """Image of the packed monomial q^k e^λ under λ -> wλ."""
        hit = self._key_cache.get(key)
        if hit is not None:
            return hit
        qh, wt = unpack(key, len(self.matrix))
        out = qh
        for c, img in zip(wt, self._key_images):
            if c:
                out += c * img
        self._key_cache[key] = out
        return out


class WeylGroup:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.simple_matrices = tuple(self._reflection_matrix(i) for i in range(n))
        elements: list[WeylElt] = []
        by_rho: dict[Vec, int] = {}
        e = WeylElt(self, 0, (), ident)
        elements.append(e)
        by_rho[rs.rho] = 0
        # BFS with letters appended in increasing order yields ShortLex-minimal words
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(n):
                    m = _matmul(w.matrix, self.simple_matrices[i])
                    key = _matvec(m, rs.rho)
                    if key in by_rho:
                        continue
                    v = WeylElt(self, len(elements), w.word + (i,), m)
                    by_rho[key] = v.index
                    elements.append(v)
                    nxt.append(v)
                    if len(elements) > 100_000:
                        raise CartanError("Weyl group too large")
            frontier = nxt
        self.elements: tuple[WeylElt, ...] = tuple(elements)
        self._by_rho = by_rho
        self.order = len(elements)
        self.identity = e
        self.simple = tuple(self.from_word([i]) for i in range(n))
        self._right = [[self._lookup(_matmul(w.matrix, self.simple_matrices[i])) for i in range(n)]
                       for w in elements]
        self._left = [[self._lookup(_matmul(self.simple_matrices[i], w.matrix)) for i in range(n)]
                      for w in elements]
        self._inverse = [self._lookup(_inverse_matrix(self, w)) for w in elements]
        self._products: dict[tuple[int, int], int] = {}
        self.longest = max(elements, key=lambda w: w.length)
        self._build_bruhat()

    def _reflection_matrix(self, i: int) -> tuple[Vec, ...]:
        n = self.rs.rank
        a = self.rs.simple_roots[i]
        # column j is s_i(ω_j) = ω_j - δ_ij α_i
        return tuple(tuple(int(r == c) - (a[r] if c == i else 0) for c in range(n)) for r in range(n))

    def _lookup(self, matrix) -> int:
        return self._by_rho[_matvec(matrix, self.rs.rho)]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, index: int) -> WeylElt:
        return self.elements[index]

    def _check(self, *ws: WeylElt) -> None:
        for w in ws:
            if w.group is not self:
                raise ValueError("Weyl elements from different root systems")

    def from_word(self, word: Iterable[int]) -> WeylElt:
        """Product s_{i1} s_{i2} ... for 0-based indices."""
        idx = 0
        for i in word:
            idx = self._right[idx][i] if hasattr(self, "_right") else self._slow_right(idx, i)
        return self.elements[idx]

    def _slow_right(self, idx: int, i: int) -> int:
        return self._lookup(_matmul(self.elements[idx].matrix, self.simple_matrices[i]))

    def parse(self, text: str) -> WeylElt:
        """Parse a serialized element: "e" or 1-based indices such as "1 2 1"."""
        text = text.strip()
        if text in ("e", ""):
            return self.identity
        letters = [int(t) - 1 for t in text.replace(",", " ").split()]
        if any(not 0 <= i < self.rs.rank for i in letters):
            raise ValueError(f"index out of range in {text!r}")
        return self.from_word(letters)

    def multiply(self, u: WeylElt, v: WeylElt) -> WeylElt:
        self._check(u, v)
        key = (u.index, v.index)
        hit = self._products.get(key)
        if hit is None:
            idx = u.index
            for i in v.word:
                idx = self._right[idx][i]
            self._products[key] = hit = idx
        return self.elements[hit]

    def right_mult(self, w: WeylElt, i: int) -> WeylElt:
        return self.elements[self._right[w.index][i]]

    def left_mult(self, i: int, w: WeylElt) -> WeylElt:
        return self.elements[self._left[w.index][i]]

    def inverse(self, w: WeylElt) -> WeylElt:
        self._check(w)
        return self.elements[self._inverse[w.index]]

    def length(self, w: WeylElt) -> int:
        return w.length

    # Bruhat order
    def _build_bruhat(self) -> None:
        below = [0] * self.order
        below[0] = 1
        for w in self.elements[1:]:
            s = w.word[-1]
            ws = self._right[w.index][s]
            mask = below[ws]
            bits = 0
            for u in self.elements:
                us = self._right[u.index][s]
                m = us if len(self.elements[us].word) < u.length else u.index
                if mask >> m & 1:
                    bits |= 1 << u.index
            below[w.index] = bits
        self._below = below

    def bruhat_leq(self, u: WeylElt, w: WeylElt) -> bool:
        self._check(u, w)
        return bool(self._below[w.index] >> u.index & 1)

    def interval(self, u: WeylElt, w: WeylElt) -> list[WeylElt]:
        return [v for v in self.elements if self.bruhat_leq(u, v) and self.bruhat_leq(v, w)]

    # roots and words
    def inversion_set(self, w: WeylElt) -> list[Vec]:
        """Σ_w = wΣ⁻ ∩ Σ⁺, the positive roots β with w^{-1}β < 0."""
        winv = self.inverse(w)
        rs = self.rs
        return [b for b in rs.positive_roots if not rs.is_positive_root(winv.act(b))]

    def reduced_words(self, w: WeylElt) -> list[tuple[int, ...]]:
        """All reduced words of w (0-based letters), sorted."""
        memo: dict[int, list[tuple[int, ...]]] = {0: [()]}

        def words(v: WeylElt) -> list[tuple[int, ...]]:
            if v.index in memo:
                return memo[v.index]
            out = []
            for i in range(self.rs.rank):
                vs = self.right_mult(v, i)
                if vs.length < v.length:
                    out.extend(x + (i,) for x in words(vs))
            memo[v.index] = sorted(out)
            return memo[v.index]

        return words(w)

    def is_reduced_word(self, word: Sequence[int], w: WeylElt | None = None) -> bool:
        v = self.from_word(word)
        return v.length == len(word) and (w is None or v == w)

    def parabolic_data(self, J: Iterable[int]):
        """(W_J, W^J, w_0^J) for a set J of 0-based simple indices."""
        J = frozenset(J)
        if any(not 0 <= j < self.rs.rank for j in J):
            raise ValueError(f"J={sorted(J)} is not a set of simple indices")
        WJ = [w for w in self.elements if set(w.word) <= J]
        minimal = [w for w in self.elements if all(self.right_mult(w, j).length > w.length for j in J)]
        w0J = max(WJ, key=lambda w: w.length)
        return WJ, minimal, w0J


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _inverse_matrix(group: WeylGroup, w: WeylElt):
    m = group.identity.matrix
    for i in reversed(w.word):
        m = _matmul(m, group.simple_matrices[i])
    return m
