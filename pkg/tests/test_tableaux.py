import random

import pytest
from hypothesis import given, settings, strategies as st

from twistcube.cube import TwistedCube
from twistcube.paths import concat, lower_power, raising, straight
from twistcube.rootsys import Weight, builtin_cartan
from twistcube.sampling import random_cube
from twistcube.tableaux import (
    closed_form_weight,
    condition_P_prime,
    enumerate_tableaux,
    phi,
    tableau_weights,
    tau,
    verify_bijection,
)

A1 = builtin_cartan("A1")
A2 = builtin_cartan("A2")


def sl3(*mults):
    return TwistedCube(A2, (1, 2, 1), mults)


def test_phi_examples():
    c = sl3(1, 1, 1)
    assert phi(c, 3, (0,)) == straight(c.lam(3))
    assert phi(c, 3, (1,)) == straight(Weight((-1, 1)))
    assert phi(c, 3, (1,)).weight() == Weight((-1, 1))
    for pt in c.lattice_points():
        assert phi(c, 1, pt) is not None
    with pytest.raises(ValueError):
        phi(c, 1, (0, 0))
    with pytest.raises(ValueError):
        phi(c, 3, (-1,))
    with pytest.raises(IndexError):
        phi(c, 4, ())


def test_phi_null_outside_polytope():
    assert phi(sl3(1, 1, 1), 3, (2,)) is None
    assert tau(sl3(1, 1, 1), 2, (2,)) is None


def test_tau_examples():
    c = sl3(1, 1, 1)
    assert tau(c, 3, ()) == straight(c.lam(3))
    assert tau(c, 1, (1, 1)).weight() == Weight((1, 0))
    for pt in c.lattice_points():
        for k in range(1, 4):
            t = tau(c, k, pt[k:])
            assert c.cartan.pairing(t.weight(), c.word[k - 1]) == c.bound_A(k, pt[k:])


@pytest.mark.parametrize("m", range(6))
def test_rank_one_tableaux(m):
    ts = enumerate_tableaux(TwistedCube(A1, (1,), (m,)))
    assert len(ts) == m + 1
    assert verify_bijection(TwistedCube(A1, (1,), (m,))).bijective


@pytest.mark.parametrize("mults,count", [((1, 1, 1), 13), ((2, 1, 1), 18), ((0, 1, 1), 8)])
def test_sl3_counts(mults, count):
    assert len(enumerate_tableaux(sl3(*mults))) == count


def test_tableaux_are_generated_by_witness_exponents():
    c = sl3(2, 1, 1)
    ts = enumerate_tableaux(c)
    for p in ts:
        assert phi(c, 1, ts.exponents(p)) == p


def test_condition_P_prime_examples():
    assert condition_P_prime(sl3(0, 1, 1))
    assert condition_P_prime(sl3(1, 1, 1))
    assert not condition_P_prime(TwistedCube(A2, (1, 1), (0, 2)))


def test_P_prime_witness_mechanism():
    # tau_1(x_2 = 1) = f_1(pi^{2 w1}) dips to height -1, so e_1 does not vanish on it
    c = TwistedCube(A2, (1, 1), (0, 2))
    t = tau(c, 1, (1,))
    assert t == lower_power(A2, straight(Weight((2, 0))), 1, 1)
    assert raising(A2, t, 1) is not None


def test_bijection_examples():
    for mults, count in (((1, 1, 1), 13), ((2, 1, 1), 18)):
        rep = verify_bijection(sl3(*mults))
        assert rep.bijective and rep.lattice_count == rep.tableau_count == count


def test_tableau_weights():
    ws = tableau_weights(enumerate_tableaux(TwistedCube(A1, (1,), (1,))))
    assert ws == [Weight((-1,)), Weight((1,))]
    c = sl3(1, 1, 1)
    assert phi(c, 1, (1, 1, 1)).weight() == Weight((-1, 1))
    assert len(tableau_weights(enumerate_tableaux(c))) == 13


def test_zero_multiplicity_concat_identity():
    c = TwistedCube(A2, (2, 1), (0, 1))
    assert tau(c, 1, (0,)) == straight(c.lam(2))


TYPES = ["A1", "A2", "A3", "B2", "G2"]


@st.composite
def cubes(draw, max_len=4, max_mult=2):
    cartan = builtin_cartan(draw(st.sampled_from(TYPES)))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_cube(rng, cartan, max_len, max_mult)


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_endpoint_formula(cube):
    for pt in cube.lattice_points():
        for k in range(cube.n):
            p = phi(cube, k + 1, pt[k:])
            assert p is not None
            assert p.weight() == closed_form_weight(cube, pt[k:], start=k + 1)
            if k >= 1:
                t = tau(cube, k, pt[k:])
                assert cube.cartan.pairing(t.weight(), cube.word[k - 1]) == cube.bound_A(k, pt[k:])


@settings(max_examples=150, deadline=None)
@given(cubes())
def test_P_implies_P_prime_and_bijection(cube):
    if cube.condition_P():
        assert condition_P_prime(cube)
        assert verify_bijection(cube).bijective


@settings(max_examples=100, deadline=None)
@given(cubes())
def test_tableaux_definition(cube):
    """Every enumerated path is f^{l_1}(pi^{lam_1} * ... ) for its witness exponents."""
    ts = enumerate_tableaux(cube)
    for p in ts:
        ex = ts.exponents(p)
        q = None
        for k in range(cube.n, 0, -1):
            q = lower_power(cube.cartan, concat(straight(cube.lam(k)), q), cube.word[k - 1], ex[k - 1])
        assert q == p
