"""The twisted-cube polytope P(word, mults).

Coordinates are ``x_1, ..., x_n`` and the polytope is cut out by
``0 <= x_k <= A_k(x_{k+1}, ..., x_n)`` where ``A_k`` is the pairing of
``sum_{j>=k} m_j varpi_{i_j} - sum_{j>k} x_j alpha_{i_j}`` with the coroot of
``alpha_{i_k}``.  Every ``A_k`` is affine in the later coordinates, so the
region is a bounded convex polytope and all questions about it (vertices,
minima of affine functions) are answered exactly by basis enumeration.

Indices ``k`` are 1-based throughout the public API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .rootsys import (
    CartanMatrix,
    Weight,
    as_fraction,
    solve_exact,
    validate_mults,
    validate_word,
)

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class TwistedCube:
    cartan: CartanMatrix
    word: tuple[int, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        word = validate_word(self.cartan, self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "mults", validate_mults(self.mults, len(word)))

    @property
    def n(self) -> int:
        return len(self.word)

    def beta(self, k: int) -> Weight:
        return self.cartan.simple_root(self.word[k - 1])

    def lam(self, k: int) -> Weight:
        return self.cartan.fundamental_weight(self.word[k - 1], self.mults[k - 1])

    def suffix(self, k: int) -> "TwistedCube":
        """The cube on coordinates ``x_k, ..., x_n``."""
        if not 1 <= k <= self.n + 1:
            raise IndexError(f"suffix index {k} outside [1, {self.n + 1}]")
        return TwistedCube(self.cartan, self.word[k - 1 :], self.mults[k - 1 :])

    @cached_property
    def affine_bounds(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """``A_k = const + sum_{j>k} coeff_j x_j`` as ``(const, coeffs)`` per k.

        ``coeffs`` has length ``n - k`` and is indexed by ``j = k+1..n``.
        """
        C = self.cartan.entries
        out = []
        for k in range(self.n):
            ik = self.word[k] - 1
            const = sum(self.mults[j] for j in range(k, self.n) if self.word[j] - 1 == ik)
            coeffs = tuple(-C[ik][self.word[j] - 1] for j in range(k + 1, self.n))
            out.append((const, coeffs))
        return tuple(out)

    def _check_k(self, k, suffix_len):
        if not 1 <= k <= self.n:
            raise IndexError(f"index {k} outside [1, {self.n}]")
        if suffix_len != self.n - k:
            raise ValueError(f"A_{k} takes {self.n - k} arguments, got {suffix_len}")

    def bound_A(self, k: int, x_suffix: Sequence) -> Fraction:
        """``A_k`` evaluated from its definition as a coroot pairing."""
        xs = [as_fraction(v) for v in x_suffix]
        self._check_k(k, len(xs))
        total = Weight.zero(self.cartan.rank)
        for j in range(k, self.n + 1):
            total = total + self.lam(j)
        for j, xj in zip(range(k + 1, self.n + 1), xs):
            total = total - xj * self.beta(j)
        return self.cartan.pairing(total, self.word[k - 1])

    def bound_A_closed(self, k: int, x_suffix: Sequence) -> Fraction:
        """``A_k`` via the closed form: same-root terms ``m_j - 2 x_j`` and
        adjacent-root terms ``-x_j <beta_j, beta_k^vee>``."""
        xs = [as_fraction(v) for v in x_suffix]
        self._check_k(k, len(xs))
        C = self.cartan.entries
        ik = self.word[k - 1]
        value = Fraction(self.mults[k - 1])
        for j, xj in zip(range(k + 1, self.n + 1), xs):
            ij = self.word[j - 1]
            if ij == ik:
                value += self.mults[j - 1] - 2 * xj
            elif C[ik - 1][ij - 1] < 0:
                value -= xj * C[ik - 1][ij - 1]
        return value

    def _eval_bound(self, k: int, x: Sequence) -> Fraction:
        """``A_k`` on the full vector ``x`` (length n), fast affine form."""
        const, coeffs = self.affine_bounds[k - 1]
        return const + sum((c * xv for c, xv in zip(coeffs, x[k:]) if c), Fraction(0))

    def contains(self, pt: Sequence) -> bool:
        x = [as_fraction(v) for v in pt]
        if len(x) != self.n:
            raise ValueError(f"point has dimension {len(x)}, cube has dimension {self.n}")
        return all(0 <= x[k - 1] <= self._eval_bound(k, x) for k in range(1, self.n + 1))

    def tight_constraints(self, pt: Sequence) -> int:
        """Number of the 2n defining inequalities holding with equality at ``pt``."""
        x = [as_fraction(v) for v in pt]
        count = 0
        for k in range(1, self.n + 1):
            count += x[k - 1] == 0
            count += x[k - 1] == self._eval_bound(k, x)
        return count

    def lattice_points(self) -> list[tuple[int, ...]]:
        return list(_lattice_points(self))

    def vertices(self) -> list[Vector]:
        return list(_vertices(self))

    def is_lattice_polytope(self) -> bool:
        return all(v.denominator == 1 for vert in self.vertices() for v in vert)

    def min_bound_over_suffix(self, k: int) -> Fraction | None:
        """Minimum of ``A_k`` over the suffix polytope; ``None`` if it is empty."""
        if not 1 <= k <= self.n - 1:
            raise IndexError(f"index {k} outside [1, {self.n - 1}]")
        const, coeffs = self.affine_bounds[k - 1]
        verts = _vertices(self.suffix(k + 1))
        if not verts:
            return None
        return min(const + sum(c * v for c, v in zip(coeffs, vert)) for vert in verts)

    def condition_P(self) -> bool:
        if self.n == 0:
            return True
        if self.mults[-1] < 0:
            return False
        for k in range(1, self.n):
            low = self.min_bound_over_suffix(k)
            if low is not None and low < 0:
                return False
        return True

    def scale(self, r: int) -> "TwistedCube":
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise ValueError(f"dilation factor must be a positive integer, got {r!r}")
        return TwistedCube(self.cartan, self.word, tuple(r * m for m in self.mults))

    def inequalities(self) -> list[tuple[Vector, Fraction]]:
        """H-representation ``coeffs . x <= rhs`` (lower bounds first, then upper)."""
        n = self.n
        rows = []
        for k in range(n):
            coeffs = [Fraction(0)] * n
            coeffs[k] = Fraction(-1)
            rows.append((tuple(coeffs), Fraction(0)))
        for k in range(n):
            const, later = self.affine_bounds[k]
            coeffs = [Fraction(0)] * n
            coeffs[k] = Fraction(1)
            for j, c in enumerate(later, start=k + 1):
                coeffs[j] = Fraction(-c)
            rows.append((tuple(coeffs), Fraction(const)))
        return rows


@lru_cache(maxsize=65536)
def _lattice_points(cube: TwistedCube) -> tuple[tuple[int, ...], ...]:
    n = cube.n
    if n == 0:
        return ((),)
    bounds = cube.affine_bounds
    out: list[tuple[int, ...]] = []

    def rec(k: int, suffix: list[int]):
        # k is a 0-based coordinate, suffix holds x_{k+1..n-1}
        const, coeffs = bounds[k]
        top = const + sum(c * v for c, v in zip(coeffs, suffix))
        for xk in range(0, top + 1):
            point = [xk] + suffix
            if k == 0:
                out.append(tuple(point))
            else:
                rec(k - 1, point)

    rec(n - 1, [])
    out.sort()
    return tuple(out)


@lru_cache(maxsize=65536)
def _vertices(cube: TwistedCube) -> tuple[Vector, ...]:
    """All vertices by enumerating n-subsets of the 2n bounding hyperplanes."""
    n = cube.n
    if n == 0:
        return ((),)
    rows = []  # (coeff vector, rhs) for each hyperplane
    for k in range(n):
        coeffs = [0] * n
        coeffs[k] = 1
        rows.append((coeffs, 0))
    for k in range(n):
        const, later = cube.affine_bounds[k]
        coeffs = [0] * n
        coeffs[k] = 1
        for j, c in enumerate(later, start=k + 1):
            coeffs[j] = -c
        rows.append((coeffs, const))
    found = set()
    for subset in itertools.combinations(range(2 * n), n):
        sol = solve_exact([rows[s][0] for s in subset], [rows[s][1] for s in subset])
        if sol is None or sol in found:
            continue
        if cube.contains(sol):
            found.add(sol)
    verts = sorted(found)
    # each x_k is squeezed between 0 and an affine function of bounded later
    # coordinates, so the region is a polytope: vertices exist iff it is non-empty
    ub = coordinate_bounds(cube)
    assert all(0 <= v <= b for vert in verts for v, b in zip(vert, ub))
    return tuple(verts)


def coordinate_bounds(cube: TwistedCube) -> list[int]:
    """Upper bounds for each coordinate of P derived from the inequalities alone.

    Since every ``x_j >= 0``, only positive coefficients of ``A_k`` can push
    ``x_k`` up.  In particular P is bounded.
    """
    ub = [0] * cube.n
    for k in range(cube.n - 1, -1, -1):
        const, coeffs = cube.affine_bounds[k]
        ub[k] = max(0, const + sum(c * ub[j] for j, c in enumerate(coeffs, start=k + 1) if c > 0))
    return ub


def opposite(values):
    """Reverse the coordinate order of one vector or of a collection of vectors.

    A cube is mapped to its H-representation with reversed coordinates.
    """
    if isinstance(values, TwistedCube):
        return [(tuple(reversed(c)), rhs) for c, rhs in values.inequalities()]
    items = list(values)
    if items and isinstance(items[0], (tuple, list)):
        return [tuple(reversed(v)) for v in items]
    return tuple(reversed(items))


def scaled_vertices(verts: Iterable[Vector], r: int) -> list[Vector]:
    return sorted(tuple(r * v for v in vert) for vert in verts)
