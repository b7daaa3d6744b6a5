"""Cartan-matrix root system arithmetic.

Weights are stored in the fundamental-weight basis, so the pairing of a
weight with the j-th simple coroot is just its j-th coordinate.  The Cartan
matrix convention is ``C[i][j] = <alpha_j, alpha_i^vee>``: column ``j`` is the
simple root ``alpha_j`` written in fundamental-weight coordinates.

Root indices in the public API are 1-based, matching the usual labelling of
Dynkin diagram nodes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class RootSystemError(ValueError):
    pass


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"-3/2"`` exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Weight:
    """A point of the real weight space in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int, multiple=1) -> "Weight":
        if not 1 <= i <= rank:
            raise RootSystemError(f"fundamental weight index {i} outside [1, {rank}]")
        return cls(multiple if k == i - 1 else 0 for k in range(rank))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, scalar) -> "Weight":
        s = as_fraction(scalar)
        return Weight(s * a for a in self.coords)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"weight {self} is not integral")
        return tuple(int(c) for c in self.coords)

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a square linear system over the rationals; ``None`` if singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        pivot_row = [v * inv for v in aug[col]]
        aug[col] = pivot_row
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * p for a, p in zip(aug[r], pivot_row)]
    return tuple(row[n] for row in aug)


@dataclass(frozen=True)
class CartanMatrix:
    """Cartan matrix of a finite-type root system, ``C[i][j] = <alpha_j, alpha_i^vee>``."""

    entries: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        r = len(rows)
        if r == 0:
            raise RootSystemError("Cartan matrix must have positive rank")
        if any(len(row) != r for row in rows):
            raise RootSystemError("Cartan matrix must be square")
        for i in range(r):
            if rows[i][i] != 2:
                raise RootSystemError(f"diagonal entry C[{i}][{i}] must be 2")
            for j in range(r):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise RootSystemError(f"off-diagonal entry C[{i}][{j}] must be <= 0")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise RootSystemError(f"C[{i}][{j}] and C[{j}][{i}] must vanish together")
        # finite type <=> every principal minor is positive
        for size in range(1, r + 1):
            for idx in itertools.combinations(range(r), size):
                sub = [[rows[a][b] for b in idx] for a in idx]
                if _det(sub) <= 0:
                    raise RootSystemError("Cartan matrix is not of finite type")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _check(self, j: int):
        if not isinstance(j, int) or not 1 <= j <= self.rank:
            raise RootSystemError(f"root index {j} outside [1, {self.rank}]")

    def pairing(self, lam: Weight, j: int) -> Fraction:
        """``<lam, alpha_j^vee>``."""
        self._check(j)
        return lam.coords[j - 1]

    def simple_root(self, j: int) -> Weight:
        self._check(j)
        return self._roots[j - 1]

    @cached_property
    def _roots(self) -> tuple[Weight, ...]:
        r = self.rank
        return tuple(Weight(self.entries[i][j] for i in range(r)) for j in range(r))

    def fundamental_weight(self, i: int, multiple=1) -> Weight:
        self._check(i)
        return Weight.fundamental(self.rank, i, multiple)

    def reflect(self, lam: Weight, j: int) -> Weight:
        """The simple reflection ``s_j(lam) = lam - <lam, alpha_j^vee> alpha_j``."""
        c = self.pairing(lam, j)
        if c == 0:
            return lam
        return lam - c * self._roots[j - 1]

    def to_root_coordinates(self, lam: Weight) -> tuple[Fraction, ...]:
        """Coordinates of ``lam`` in the simple-root basis (solves ``C c = lam``)."""
        sol = solve_exact(self.entries, lam.coords)
        assert sol is not None, "finite-type Cartan matrices are invertible"
        return sol

    def is_reduced(self, word: Sequence[int]) -> bool:
        """Whether ``s_{i_1} ... s_{i_n}`` has length exactly ``n``.

        Appending ``s_i`` to ``w`` increases the length iff ``w(alpha_i)`` is a
        positive root, which we test in simple-root coordinates.
        """
        word = validate_word(self, word)
        prefix: list[int] = []
        for letter in word:
            image = self.simple_root(letter)
            for k in reversed(prefix):
                image = self.reflect(image, k)
            if any(c < 0 for c in self.to_root_coordinates(image)):
                return False
            prefix.append(letter)
        return True

    def to_json(self) -> dict:
        return {"rank": self.rank, "matrix": [list(row) for row in self.entries]}


def validate_word(cartan: CartanMatrix, word: Sequence[int]) -> tuple[int, ...]:
    letters = tuple(word)
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(letter, int):
            raise RootSystemError(f"word letter {letter!r} is not an integer")
        if not 1 <= letter <= cartan.rank:
            raise RootSystemError(f"word letter {letter} outside [1, {cartan.rank}]")
    return letters


def validate_mults(mults: Sequence[int], length: int) -> tuple[int, ...]:
    values = tuple(mults)
    if len(values) != length:
        raise RootSystemError(
            f"multiplicity list has length {len(values)}, word has length {length}"
        )
    for m in values:
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise RootSystemError(f"multiplicity {m!r} must be a non-negative integer")
    return values


# --- built-in types (Bourbaki labelling) --------------------------------------

def _from_diagram(rank: int, edges, sq_lengths) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix from Dynkin edges and squared root lengths.

    Adjacent roots have inner product ``-max(|a|^2, |b|^2) / 2``, which covers
    single, double and triple bonds.
    """
    inner = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        inner[i][i] = Fraction(sq_lengths[i])
    for a, b in edges:
        v = -Fraction(max(sq_lengths[a], sq_lengths[b]), 2)
        inner[a][b] = inner[b][a] = v
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            c = 2 * inner[i][j] / inner[i][i]
            assert c.denominator == 1
            row.append(int(c))
        rows.append(tuple(row))
    return tuple(rows)


def _chain(rank):
    return [(k, k + 1) for k in range(rank - 1)]


def builtin_cartan(name: str) -> CartanMatrix:
    """Cartan matrix for a type name such as ``"A2"``, ``"B3"``, ``"G2"``."""
    text = name.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootSystemError(f"unknown Cartan type {name!r}")
    family, rank = text[0], int(text[1:])
    if family == "A" and rank >= 1:
        rows = _from_diagram(rank, _chain(rank), [2] * rank)
    elif family == "B" and rank >= 2:
        rows = _from_diagram(rank, _chain(rank), [2] * (rank - 1) + [1])
    elif family == "C" and rank >= 2:
        rows = _from_diagram(rank, _chain(rank), [1] * (rank - 1) + [2])
    elif family == "D" and rank >= 4:
        edges = _chain(rank - 1) + [(rank - 3, rank - 1)]
        rows = _from_diagram(rank, edges, [2] * rank)
    elif family == "E" and rank in (6, 7, 8):
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, rank - 1)]
        rows = _from_diagram(rank, edges, [2] * rank)
    elif family == "F" and rank == 4:
        rows = _from_diagram(4, _chain(4), [2, 2, 1, 1])
    elif family == "G" and rank == 2:
        rows = _from_diagram(2, _chain(2), [1, 3])
    else:
        raise RootSystemError(f"unknown Cartan type {name!r}")
    return CartanMatrix(rows, name=f"{family}{rank}")


BUILTIN_TYPES = (
    [f"A{r}" for r in range(1, 9)]
    + [f"B{r}" for r in range(2, 9)]
    + [f"C{r}" for r in range(2, 9)]
    + [f"D{r}" for r in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def cartan_from_json(data) -> CartanMatrix:
    """Custom Cartan matrix from ``{"rank": r, "matrix": [[...]]}``."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict) or "matrix" not in data:
        raise RootSystemError('Cartan file must be an object with a "matrix" entry')
    matrix = data["matrix"]
    rank = data.get("rank", len(matrix))
    if rank != len(matrix):
        raise RootSystemError(f"declared rank {rank} does not match matrix size {len(matrix)}")
    return CartanMatrix(tuple(tuple(row) for row in matrix), name=data.get("name", "custom"))


def load_cartan(path) -> CartanMatrix:
    with open(path) as fh:
        return cartan_from_json(json.load(fh))
