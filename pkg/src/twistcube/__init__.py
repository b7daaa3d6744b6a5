"""Exact twisted-cube polytopes, Littelmann paths and Demazure characters."""

from .cube import TwistedCube, opposite
from .paths import Path, concat, lower_power, lowering, raise_power, raising, straight
from .rootsys import CartanMatrix, Weight, builtin_cartan
from .tableaux import enumerate_tableaux, phi, tau, verify_bijection

__all__ = [
    "CartanMatrix",
    "Path",
    "TwistedCube",
    "Weight",
    "builtin_cartan",
    "concat",
    "enumerate_tableaux",
    "lower_power",
    "lowering",
    "opposite",
    "phi",
    "raise_power",
    "raising",
    "straight",
    "tau",
    "verify_bijection",
]
