"""Characters in the group algebra of the weight lattice.

The Demazure-operator character is computed independently of paths and
polytopes, and serves as the oracle for tableau counts and path characters.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .cube import TwistedCube
from .rootsys import CartanMatrix, RootSystemError, Weight
from .tableaux import TableauSet, enumerate_tableaux

IntWeight = tuple[int, ...]


class WeightPolynomial:
    """Finitely supported integer combination of monomials ``e^lam``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[IntWeight, int] | Iterable[tuple[IntWeight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IntWeight, int] = defaultdict(int)
        for w, c in items:
            acc[tuple(int(v) for v in w)] += int(c)
        self.terms: dict[IntWeight, int] = {w: c for w, c in acc.items() if c}

    @classmethod
    def monomial(cls, lam, coeff: int = 1) -> "WeightPolynomial":
        if isinstance(lam, Weight):
            lam = lam.to_ints()
        return cls({tuple(lam): coeff})

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return WeightPolynomial(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "WeightPolynomial":
        return WeightPolynomial({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        acc: dict[IntWeight, int] = defaultdict(int)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(w1, w2))] += c1 * c2
        return WeightPolynomial(acc)

    def __eq__(self, other):
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, lam) -> int:
        return self.terms.get(tuple(lam), 0)

    def dimension(self) -> int:
        """Coefficient sum, i.e. the value at the identity of the torus."""
        return sum(self.terms.values())

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "coeff": c} for w, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "WeightPolynomial":
        return cls((tuple(item["weight"]), item["coeff"]) for item in data)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*e^{w}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts)


def demazure_op(cartan: CartanMatrix, f: WeightPolynomial, i: int) -> WeightPolynomial:
    """Isobaric divided difference ``D_i`` applied termwise.

    With ``m = <lam, alpha_i^vee>``: ``e^lam`` maps to the string
    ``e^lam + e^{lam - alpha_i} + ... + e^{s_i lam}`` when ``m >= 0``, to ``0``
    when ``m = -1`` and to ``-(e^{lam + alpha_i} + ... + e^{lam + (-m-1) alpha_i})``
    when ``m <= -2``.
    """
    if not 1 <= i <= cartan.rank:
        raise RootSystemError(f"root index {i} outside [1, {cartan.rank}]")
    alpha = cartan.simple_root(i).to_ints()
    acc: dict[IntWeight, int] = defaultdict(int)
    for lam, c in f.terms.items():
        m = lam[i - 1]
        if m >= 0:
            for t in range(m + 1):
                acc[tuple(a - t * b for a, b in zip(lam, alpha))] += c
        elif m <= -2:
            for t in range(1, -m):
                acc[tuple(a + t * b for a, b in zip(lam, alpha))] -= c
    return WeightPolynomial(acc)


def generalized_demazure_character(cube: TwistedCube) -> WeightPolynomial:
    """``D_{i_1}(e^{lam_1} D_{i_2}(e^{lam_2} ... D_{i_n}(e^{lam_n})))``."""
    cartan = cube.cartan
    result = WeightPolynomial.monomial((0,) * cartan.rank)
    for k in range(cube.n, 0, -1):
        result = WeightPolynomial.monomial(cube.lam(k)) * result
        result = demazure_op(cartan, result, cube.word[k - 1])
    return result


def path_character(ts: TableauSet) -> WeightPolynomial:
    return WeightPolynomial((p.weight().to_ints(), 1) for p in ts.paths)


def cube_character(cube: TwistedCube) -> WeightPolynomial:
    """Sum of ``e^{sum m_j varpi_{i_j} - sum x_j alpha_{i_j}}`` over lattice points."""
    rank = cube.cartan.rank
    top = [0] * rank
    for k in range(1, cube.n + 1):
        top[cube.word[k - 1] - 1] += cube.mults[k - 1]
    roots = [cube.beta(k).to_ints() for k in range(1, cube.n + 1)]
    terms: dict[IntWeight, int] = defaultdict(int)
    for pt in cube.lattice_points():
        w = list(top)
        for x, root in zip(pt, roots):
            if x:
                for a in range(rank):
                    w[a] -= x * root[a]
        terms[tuple(w)] += 1
    return WeightPolynomial(terms)


def character(cube: TwistedCube, method: str = "path") -> WeightPolynomial:
    if method == "path":
        return path_character(enumerate_tableaux(cube))
    if method == "demazure":
        return generalized_demazure_character(cube)
    if method == "cube":
        return cube_character(cube)
    raise ValueError(f"unknown character method {method!r}")
