import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from twistcube.cube import TwistedCube, coordinate_bounds, opposite, scaled_vertices
from twistcube.rootsys import RootSystemError, builtin_cartan
from twistcube.sampling import random_cube

A1 = builtin_cartan("A1")
A2 = builtin_cartan("A2")
F = Fraction


def sl3(*mults):
    return TwistedCube(A2, (1, 2, 1), mults)


def test_bound_examples():
    c = sl3(1, 1, 1)
    assert c.bound_A(3, ()) == 1
    assert c.bound_A(2, (1,)) == 2
    assert sl3(0, 1, 1).bound_A(1, (0, 1)) == -1
    assert sl3(0, 1, 1).bound_A_closed(1, (0, 1)) == -1
    with pytest.raises(ValueError):
        c.bound_A(1, (1,))


def test_invalid_cubes():
    with pytest.raises(RootSystemError):
        TwistedCube(A2, (1, 2), (1,))
    with pytest.raises(RootSystemError):
        TwistedCube(A2, (1, 3), (1, 1))
    with pytest.raises(RootSystemError):
        TwistedCube(A2, (1, 2), (1, -1))


def _brute_121(m1, m2, m3):
    """Nested loops over the defining inequalities written out by hand for A2, (1,2,1)."""
    pts = set()
    for x3 in range(m3 + 1):
        for x2 in range(m2 + x3 + 1):
            for x1 in range(m1 + m3 - 2 * x3 + x2 + 1):
                pts.add((x1, x2, x3))
    return pts


@pytest.mark.parametrize("mults,count", [((1, 1, 1), 13), ((0, 1, 1), 8), ((2, 1, 1), 18)])
def test_lattice_points_examples(mults, count):
    pts = sl3(*mults).lattice_points()
    assert set(pts) == _brute_121(*mults)
    assert len(pts) == count


def test_lattice_points_interval():
    assert TwistedCube(A1, (1,), (3,)).lattice_points() == [(0,), (1,), (2,), (3,)]


def test_contains_examples():
    assert sl3(0, 1, 1).contains((0, 0, F(1, 2)))
    assert not sl3(1, 1, 1).contains((0, 0, 2))
    assert sl3(1, 1, 1).contains((0, 0, 0))
    with pytest.raises(ValueError):
        sl3(1, 1, 1).contains((0, 0))


def test_vertices_examples():
    assert TwistedCube(A1, (1,), (2,)).vertices() == [(0,), (2,)]
    assert (0, 0, F(1, 2)) in sl3(0, 1, 1).vertices()
    v = sl3(1, 1, 1).vertices()
    assert (0, 0, 0) in v and (2, 0, 0) in v


def test_nonexample_has_one_fractional_vertex():
    frac = [v for v in sl3(0, 1, 1).vertices() if any(c.denominator != 1 for c in v)]
    assert frac == [(0, 0, F(1, 2))]


def test_lattice_polytope_examples():
    assert sl3(1, 1, 1).is_lattice_polytope()
    assert not sl3(0, 1, 1).is_lattice_polytope()
    for m in range(6):
        assert TwistedCube(A1, (1,), (m,)).is_lattice_polytope()


def test_min_bound_examples():
    assert sl3(0, 1, 1).min_bound_over_suffix(1) == -1
    assert sl3(1, 1, 1).min_bound_over_suffix(1) == 0
    A3 = builtin_cartan("A3")
    assert TwistedCube(A3, (1, 3), (2, 5)).min_bound_over_suffix(1) == 2
    with pytest.raises(IndexError):
        sl3(1, 1, 1).min_bound_over_suffix(3)


def test_condition_P_examples():
    assert sl3(1, 1, 1).condition_P()
    assert sl3(2, 1, 1).condition_P()
    assert not sl3(0, 1, 1).condition_P()


def test_scale_examples():
    c = sl3(1, 1, 1)
    assert c.scale(1) == c
    big = TwistedCube(A1, (1,), (2,)).scale(3)
    assert big.mults == (6,) and big.vertices() == [(0,), (6,)]
    assert sl3(2, 2, 2).vertices() == scaled_vertices(c.vertices(), 2)
    with pytest.raises(ValueError):
        c.scale(0)


def test_opposite():
    assert opposite((1, 2, 3)) == (3, 2, 1)
    assert opposite(opposite((1, 2, 3))) == (1, 2, 3)
    pts = sl3(1, 1, 1).lattice_points()
    assert len(set(opposite(pts))) == len(pts)
    # x_3 <= m_3 becomes a bound on the first reversed coordinate
    assert opposite(sl3(1, 1, 1))[-1] == ((1, 0, 0), 1)


# --- properties over random cubes ------------------------------------------------

TYPES = ["A1", "A2", "A3", "B2", "G2"]


@st.composite
def cubes(draw, max_len=4, max_mult=2):
    cartan = builtin_cartan(draw(st.sampled_from(TYPES)))
    n = draw(st.integers(1, max_len))
    word = tuple(draw(st.lists(st.integers(1, cartan.rank), min_size=n, max_size=n)))
    mults = tuple(draw(st.lists(st.integers(0, max_mult), min_size=n, max_size=n)))
    return TwistedCube(cartan, word, mults)


@settings(max_examples=200, deadline=None)
@given(cubes(max_len=5), st.data())
def test_bound_formulas_agree(cube, data):
    for k in range(1, cube.n + 1):
        suffix = data.draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                                    min_size=cube.n - k, max_size=cube.n - k))
        assert cube.bound_A(k, suffix) == cube.bound_A_closed(k, suffix)


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_lattice_points_match_box_filter(cube):
    box = [range(b + 1) for b in coordinate_bounds(cube)]
    brute = [p for p in itertools.product(*box) if cube.contains(p)]
    assert sorted(brute) == cube.lattice_points()


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_vertices_tight_and_feasible(cube):
    for v in cube.vertices():
        assert cube.contains(v)
        assert cube.tight_constraints(v) >= cube.n


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_inductive_structure(cube):
    pts = cube.lattice_points()
    for k in range(1, cube.n):
        sub = cube.suffix(k + 1)
        sub_pts = set(sub.lattice_points())
        assert all(p[k:] in sub_pts for p in pts)
        if cube.condition_P():
            assert all(cube.contains((0,) * k + q) for q in sub_pts)
            assert sub.condition_P()


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_condition_P_gives_lattice_polytope(cube):
    if cube.condition_P():
        assert cube.is_lattice_polytope()


@settings(max_examples=60, deadline=None)
@given(cubes(max_len=3), st.integers(2, 3))
def test_scaling(cube, r):
    assert cube.scale(r).vertices() == scaled_vertices(cube.vertices(), r)
    assert cube.scale(r).condition_P() == cube.condition_P()


def test_lattice_vertices_match_convex_hull():
    """Under (P) the vertex set equals the hull vertices of the lattice points (qhull)."""
    rng = random.Random(5)
    checked = 0
    for _ in range(600):
        cube = random_cube(rng, builtin_cartan(rng.choice(["A2", "B2", "G2"])), max_len=4, max_mult=2)
        if not cube.condition_P() or cube.n < 2:
            continue
        pts = np.array(cube.lattice_points(), dtype=float)
        try:
            hull = ConvexHull(pts)
        except QhullError:
            continue  # lower-dimensional
        hull_vertices = sorted(tuple(int(round(c)) for c in pts[i]) for i in hull.vertices)
        assert hull_vertices == [tuple(int(c) for c in v) for v in cube.vertices()]
        checked += 1
    assert checked > 50


def test_min_bound_matches_float_lp():
    rng = random.Random(11)
    for _ in range(200):
        cube = random_cube(rng, builtin_cartan(rng.choice(["A2", "A3", "B2", "G2"])), max_len=5, max_mult=3)
        if cube.n < 2:
            continue
        for k in range(1, cube.n):
            const, coeffs = cube.affine_bounds[k - 1]
            sub = cube.suffix(k + 1)
            A_ub = [[float(c) for c in row] for row, _ in sub.inequalities()]
            b_ub = [float(rhs) for _, rhs in sub.inequalities()]
            res = linprog([float(c) for c in coeffs], A_ub=A_ub, b_ub=b_ub, bounds=(None, None))
            assert res.status == 0
            assert abs(const + res.fun - float(cube.min_bound_over_suffix(k))) < 1e-9
