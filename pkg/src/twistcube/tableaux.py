"""Standard tableaux as iterated lowerings of concatenated straight paths.

For a cube with word ``(i_1..i_n)`` and multiplicities ``(m_1..m_n)`` set
``lam_k = m_k varpi_{i_k}``.  Then

    tau_n = pi^{lam_n},    tau_k(x_{k+1..n}) = pi^{lam_k} * phi_{k+1}(x_{k+1..n}),
    phi_k(x_k..x_n) = f_{i_k}^{x_k}(tau_k(x_{k+1..n})).

The tableau set is the set of all non-null ``phi_1(l_1..l_n)`` with
``l_j >= 0``.  Distinct exponent vectors may give the same path, so the set is
deduplicated on canonical paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .cube import TwistedCube
from .paths import MaybePath, Path, concat, lower_power, lowering, p_max, raising, straight
from .rootsys import Weight


def _straight_lam(cube: TwistedCube, k: int) -> Path:
    return straight(cube.lam(k))


def phi(cube: TwistedCube, k: int, x: Sequence[int]) -> MaybePath:
    """``phi_k(x_k, ..., x_n)``; ``x`` has length ``n - k + 1``."""
    xs = tuple(x)
    if not 1 <= k <= cube.n:
        raise IndexError(f"index {k} outside [1, {cube.n}]")
    if len(xs) != cube.n - k + 1:
        raise ValueError(f"phi_{k} takes {cube.n - k + 1} arguments, got {len(xs)}")
    if any(v < 0 for v in xs):
        raise ValueError("exponents must be non-negative")
    return _phi(cube, k, xs)


@lru_cache(maxsize=262144)
def _phi(cube: TwistedCube, k: int, xs: tuple[int, ...]) -> MaybePath:
    return lower_power(cube.cartan, _tau(cube, k, xs[1:]), cube.word[k - 1], xs[0])


def _tau(cube: TwistedCube, k: int, xs: tuple[int, ...]) -> MaybePath:
    head = _straight_lam(cube, k)
    if k == cube.n:
        return head
    rest = _phi(cube, k + 1, xs)
    if rest is None:
        return None
    return concat(head, rest)


def tau(cube: TwistedCube, k: int, x_suffix: Sequence[int]) -> MaybePath:
    """``tau_k(x_{k+1}, ..., x_n)``; for ``k = n`` the suffix is empty.

    A null ``phi_{k+1}`` makes ``tau_k`` null as well, so that null values
    propagate through the whole recursion instead of silently dropping the
    tail of the word.
    """
    xs = tuple(x_suffix)
    if not 1 <= k <= cube.n:
        raise IndexError(f"index {k} outside [1, {cube.n}]")
    if len(xs) != cube.n - k:
        raise ValueError(f"tau_{k} takes {cube.n - k} arguments, got {len(xs)}")
    if any(v < 0 for v in xs):
        raise ValueError("exponents must be non-negative")
    return _tau(cube, k, xs)


@dataclass(frozen=True)
class TableauSet:
    """Deduplicated standard tableaux, each with one witness exponent vector."""

    cube: TwistedCube
    witnesses: dict = field(compare=False, repr=False)

    @property
    def paths(self) -> list[Path]:
        return sorted(self.witnesses)

    def __len__(self):
        return len(self.witnesses)

    def __iter__(self):
        return iter(self.paths)

    def __contains__(self, p):
        return p in self.witnesses

    def exponents(self, p: Path) -> tuple[int, ...]:
        return self.witnesses[p]


@lru_cache(maxsize=65536)
def _enumerate(cube: TwistedCube) -> tuple[tuple[Path, tuple[int, ...]], ...]:
    n = cube.n
    cartan = cube.cartan
    j = cube.word[0]
    head = _straight_lam(cube, 1)
    if n == 1:
        bases = [(head, ())]
    else:
        bases = [(concat(head, t), ex) for t, ex in _enumerate(cube.suffix(2))]
    found: dict[Path, tuple[int, ...]] = {}
    for base, ex in bases:
        # f_j^x(base) is non-null exactly for x <= P
        p = base
        for x in range(p_max(base, j) + 1):
            if x:
                p = lowering(cartan, p, j)
            found.setdefault(p, (x,) + ex)
    return tuple(sorted(found.items()))


def enumerate_tableaux(cube: TwistedCube) -> TableauSet:
    if cube.n == 0:
        return TableauSet(cube, {Path([()]): ()})
    return TableauSet(cube, dict(_enumerate(cube)))


def tableau_weights(ts: TableauSet) -> list[Weight]:
    """Endpoints of all tableaux, sorted (a multiset)."""
    return sorted((p.weight() for p in ts.paths), key=lambda w: w.coords)


def closed_form_weight(cube: TwistedCube, x: Sequence[int], start: int = 1) -> Weight:
    """``sum_{j>=start} m_j varpi_{i_j} - sum_{j>=start} x_j alpha_{i_j}``.

    ``x`` holds ``x_start, ..., x_n``.
    """
    total = Weight.zero(cube.cartan.rank)
    for j, xj in zip(range(start, cube.n + 1), x):
        total = total + cube.lam(j) - xj * cube.beta(j)
    return total


def condition_P_prime(cube: TwistedCube) -> bool:
    """Whether ``e_{i_k}(tau_k(x_{k+1..n}))`` vanishes for every lattice point and k."""
    cartan = cube.cartan
    n = cube.n
    for k in range(1, n + 1):
        seen = set()
        for pt in cube.lattice_points():
            suffix = pt[k:]
            if suffix in seen:
                continue
            seen.add(suffix)
            if raising(cartan, tau(cube, k, suffix), cube.word[k - 1]) is not None:
                return False
    return True


@dataclass
class BijectionReport:
    lattice_count: int
    tableau_count: int
    null_images: list = field(default_factory=list)
    collisions: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.null_images and not self.collisions

    @property
    def surjective(self) -> bool:
        return not self.missing

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective and self.lattice_count == self.tableau_count

    def to_json(self) -> dict:
        from .paths import path_to_json

        return {
            "bijective": self.bijective,
            "lattice_count": self.lattice_count,
            "tableau_count": self.tableau_count,
            "null_images": [list(p) for p in self.null_images],
            "collisions": [[list(a), list(b)] for a, b in self.collisions],
            "missing": [path_to_json(p) for p in self.missing],
        }


def verify_bijection(cube: TwistedCube) -> BijectionReport:
    """Check that ``phi_1`` maps the lattice points bijectively onto the tableaux."""
    points = cube.lattice_points()
    tableaux = enumerate_tableaux(cube)
    report = BijectionReport(len(points), len(tableaux))
    image: dict[Path, tuple[int, ...]] = {}
    for pt in points:
        p = phi(cube, 1, pt)
        if p is None:
            report.null_images.append(pt)
            continue
        if p in image:
            report.collisions.append((image[p], pt))
            continue
        image[p] = pt
    report.missing = [p for p in tableaux.paths if p not in image]
    return report


def clear_caches():
    """Drop memoized lattice points, vertices, tableaux and phi values."""
    from .cube import _lattice_points, _vertices

    for fn in (_lattice_points, _vertices, _phi, _enumerate):
        fn.cache_clear()
