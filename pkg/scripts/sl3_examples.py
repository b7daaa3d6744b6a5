"""Print the three SL3 examples for the word (1,2,1): conditions, counts, vertices."""

from twistcube.characters import generalized_demazure_character
from twistcube.cube import TwistedCube
from twistcube.paths import rational_str
from twistcube.rootsys import builtin_cartan
from twistcube.tableaux import condition_P_prime, enumerate_tableaux


def main():
    a2 = builtin_cartan("A2")
    for mults in [(1, 1, 1), (2, 1, 1), (0, 1, 1)]:
        cube = TwistedCube(a2, (1, 2, 1), mults)
        counts = (
            len(cube.lattice_points()),
            len(enumerate_tableaux(cube)),
            generalized_demazure_character(cube).dimension(),
        )
        print(f"m = {mults}")
        print(f"  (P) = {cube.condition_P()}   (P') = {condition_P_prime(cube)}")
        print(f"  lattice / tableaux / oracle = {counts}")
        print(f"  lattice polytope = {cube.is_lattice_polytope()}")
        for v in cube.vertices():
            print("   ", " ".join(rational_str(c) for c in v))


if __name__ == "__main__":
    main()
