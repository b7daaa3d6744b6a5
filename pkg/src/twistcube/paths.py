"""Piecewise-linear paths in weight space and the root operators e_j, f_j.

A path is stored as its breakpoint sequence ``b_0 = 0, b_1, ..., b_m`` in
canonical form: no repeated consecutive breakpoints and no two consecutive
segments pointing in the same direction.  Two paths are equal as paths up to
reparametrization exactly when their canonical breakpoint sequences agree.

The formal symbol for a vanishing root operator is ``None``; every operator
here maps ``None`` to ``None``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rootsys import CartanMatrix, RootSystemError, Weight, as_fraction

Point = tuple[Fraction, ...]


def _same_direction(a: Point, b: Point, c: Point) -> bool:
    """True iff ``c - b`` is a positive multiple of ``b - a`` (both non-zero)."""
    ratio = None
    for x, y, z in zip(a, b, c):
        d1 = y - x
        d2 = z - y
        if d1 == 0:
            if d2 != 0:
                return False
            continue
        r = d2 / d1
        if ratio is None:
            if r <= 0:
                return False
            ratio = r
        elif r != ratio:
            return False
    return ratio is not None


def _canonical(points: Sequence[Point]) -> tuple[Point, ...]:
    out = [points[0]]
    for b in points[1:]:
        if b == out[-1]:
            continue
        if len(out) >= 2 and _same_direction(out[-2], out[-1], b):
            out[-1] = b
        else:
            out.append(b)
    return tuple(out)


class Path:
    """A path starting at the origin, held in canonical breakpoint form."""

    __slots__ = ("points", "_hash")

    def __init__(self, breakpoints: Iterable, *, _trusted: bool = False):
        if _trusted:
            pts = tuple(breakpoints)
        else:
            pts = tuple(tuple(as_fraction(c) for c in b) for b in breakpoints)
            if not pts:
                raise ValueError("a path needs at least one breakpoint")
            rank = len(pts[0])
            if any(len(b) != rank for b in pts):
                raise ValueError("breakpoints must all have the same rank")
            if any(c != 0 for c in pts[0]):
                raise ValueError("paths must start at the origin")
        self.points: tuple[Point, ...] = _canonical(pts)
        self._hash = None

    @property
    def rank(self) -> int:
        return len(self.points[0])

    @property
    def breakpoints(self) -> tuple[Weight, ...]:
        return tuple(Weight(b) for b in self.points)

    @property
    def endpoint(self) -> Point:
        return self.points[-1]

    def weight(self) -> Weight:
        return Weight(self.points[-1])

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.points)
        return self._hash

    def __lt__(self, other: "Path"):
        return self.points < other.points

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        body = " -> ".join("(" + ", ".join(str(c) for c in b) + ")" for b in self.points)
        return f"Path[{body}]"


MaybePath = Optional[Path]


def straight(lam: Weight | Sequence) -> Path:
    """The straight-line path ``t -> t * lam``."""
    end = tuple(as_fraction(c) for c in lam)
    return Path([tuple(Fraction(0) for _ in end), end], _trusted=True)


def trivial(rank: int) -> Path:
    return Path([tuple(Fraction(0) for _ in range(rank))], _trusted=True)


def concat(p1: MaybePath, p2: MaybePath) -> MaybePath:
    """Concatenation; ``None`` acts as a two-sided identity."""
    if p2 is None:
        return p1
    if p1 is None:
        return p2
    end = p1.points[-1]
    shifted = [tuple(e + c for e, c in zip(end, b)) for b in p2.points[1:]]
    return Path(p1.points + tuple(shifted), _trusted=True)


def weight(p: Path) -> Weight:
    return p.weight()


def _check_index(p: Path, j: int):
    if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= p.rank:
        raise RootSystemError(f"root index {j} outside [1, {p.rank}]")


def reflect_path(cartan: CartanMatrix, p: Path, j: int) -> Path:
    """Apply the simple reflection ``s_j`` pointwise."""
    _check_index(p, j)
    alpha = cartan.simple_root(j).coords
    k = j - 1
    pts = [tuple(c - b[k] * a for c, a in zip(b, alpha)) for b in p.points]
    return Path(pts, _trusted=True)


def height_profile(p: Path, j: int) -> tuple[Fraction, ...]:
    """``<b, alpha_j^vee>`` at every breakpoint ``b``."""
    _check_index(p, j)
    return tuple(b[j - 1] for b in p.points)


def q_min(p: Path, j: int) -> int:
    """Smallest integer attained by the height function (always <= 0)."""
    return math.ceil(min(height_profile(p, j)))


def p_max(p: Path, j: int) -> int:
    """Integral part of ``h(1) - Q``: the number of times ``f_j`` applies."""
    h = height_profile(p, j)
    return math.floor(h[-1] - math.ceil(min(h)))


def _cross(a: Point, b: Point, ha: Fraction, hb: Fraction, level) -> Point:
    """Point on segment ``a -> b`` where the height equals ``level``."""
    if ha == level:
        return a
    if hb == level:
        return b
    t = (level - ha) / (hb - ha)
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def _shift(b: Point, c, alpha: Point) -> Point:
    if c == 0:
        return b
    return tuple(x - c * a for x, a in zip(b, alpha))


def raising(cartan: CartanMatrix, p: MaybePath, j: int) -> MaybePath:
    """The raising operator ``e_j``.

    Reflects the piece of the path between ``y`` (last time at level Q+1
    before ``q``) and ``q`` (first time at the minimal integer level Q).
    """
    if p is None:
        return None
    _check_index(p, j)
    k0 = j - 1
    pts = p.points
    h = [b[k0] for b in pts]
    Q = math.ceil(min(h))
    if Q >= 0:
        return None
    alpha = cartan.simple_root(j).coords

    k = next(i for i in range(len(h) - 1) if h[i + 1] <= Q)
    c_q = _cross(pts[k], pts[k + 1], h[k], h[k + 1], Q)
    prefix = list(pts[: k + 1]) + [c_q]
    hp = h[: k + 1] + [Fraction(Q)]

    top = Q + 1
    i = max(i for i in range(len(prefix) - 1) if hp[i] >= top)
    c_y = _cross(prefix[i], prefix[i + 1], hp[i], hp[i + 1], top)

    new = list(prefix[: i + 1]) + [c_y]
    new += [_shift(b, hb - top, alpha) for b, hb in zip(prefix[i + 1 :], hp[i + 1 :])]
    new += [_shift(b, -1, alpha) for b in pts[k + 1 :]]
    return Path(new, _trusted=True)


def lowering(cartan: CartanMatrix, p: MaybePath, j: int) -> MaybePath:
    """The lowering operator ``f_j``.

    Reflects the piece between ``p`` (last time at level Q) and ``x`` (first
    later time at level Q+1).
    """
    if p is None:
        return None
    _check_index(p, j)
    k0 = j - 1
    pts = p.points
    h = [b[k0] for b in pts]
    Q = math.ceil(min(h))
    if math.floor(h[-1] - Q) <= 0:
        return None
    alpha = cartan.simple_root(j).coords

    k = max(i for i in range(len(h)) if h[i] <= Q)
    c_p = _cross(pts[k], pts[k + 1], h[k], h[k + 1], Q)
    rest = [c_p] + list(pts[k + 1 :])
    hr = [Fraction(Q)] + h[k + 1 :]

    top = Q + 1
    i = next(i for i in range(1, len(rest)) if hr[i] >= top)
    c_x = _cross(rest[i - 1], rest[i], hr[i - 1], hr[i], top)

    new = list(pts[: k + 1]) + [c_p]
    new += [_shift(b, hb - Q, alpha) for b, hb in zip(rest[1:i], hr[1:i])]
    new.append(_shift(c_x, 1, alpha))
    new += [_shift(b, 1, alpha) for b in rest[i:]]
    return Path(new, _trusted=True)


def lower_power(cartan: CartanMatrix, p: MaybePath, j: int, x: int) -> MaybePath:
    """``f_j^x(p)``, short-circuiting once ``x`` exceeds the string length."""
    if x < 0:
        raise ValueError("power must be non-negative")
    if p is None:
        return None
    if x == 0:
        return p
    if x > p_max(p, j):
        return None
    for _ in range(x):
        p = lowering(cartan, p, j)
    return p


def raise_power(cartan: CartanMatrix, p: MaybePath, j: int, x: int) -> MaybePath:
    if x < 0:
        raise ValueError("power must be non-negative")
    for _ in range(x):
        if p is None:
            return None
        p = raising(cartan, p, j)
    return p


# --- serialization ------------------------------------------------------------

def rational_str(value) -> str:
    v = as_fraction(value)
    return f"{v.numerator}/{v.denominator}"


def path_to_json(p: MaybePath):
    if p is None:
        return None
    return {"breakpoints": [[rational_str(c) for c in b] for b in p.points]}


def path_from_json(data) -> MaybePath:
    if data is None:
        return None
    return Path(data["breakpoints"])
