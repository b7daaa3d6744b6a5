"""Random words, multiplicity lists and paths for property tests and sweeps."""

from __future__ import annotations

import random

from .cube import TwistedCube
from .paths import Path, concat, lowering, p_max, straight
from .rootsys import CartanMatrix


def random_cube(rng: random.Random, cartan: CartanMatrix, max_len: int = 5, max_mult: int = 2) -> TwistedCube:
    n = rng.randint(1, max_len)
    word = tuple(rng.randint(1, cartan.rank) for _ in range(n))
    mults = tuple(rng.randint(0, max_mult) for _ in range(n))
    return TwistedCube(cartan, word, mults)


def random_path(rng: random.Random, cube: TwistedCube) -> Path:
    """A random standard tableau of the cube's shape.

    Built back to front: concatenate ``pi^{lam_k}`` in front of the current
    path and lower by a random admissible power of ``f_{i_k}``.
    """
    cartan = cube.cartan
    current = None
    for k in range(cube.n, 0, -1):
        j = cube.word[k - 1]
        base = concat(straight(cube.lam(k)), current)
        for _ in range(rng.randint(0, p_max(base, j))):
            base = lowering(cartan, base, j)
        current = base
    return current
