from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from colortwist.errors import IncompatibleConstraints, NoSolution
from colortwist.scalar import (
    MINUS_ONE,
    ONE,
    RootScalar,
    canonical_root,
    inv,
    is_sign,
    mul,
    pow,
    solve_root_constraints,
)

from _instances import enumerate_root_solutions

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=12)
scalars = st.builds(
    lambda t, f: RootScalar(t, f),
    st.fractions(min_value=0, max_value=1, max_denominator=24),
    st.dictionaries(st.sampled_from(["q", "p", "r"]), fracs, max_size=2),
)


def R(t, **free):
    return RootScalar(F(t), free)


def test_mul_examples():
    assert mul(R("1/2"), R("1/2")) == ONE
    x = R("1/5", q=2)
    assert mul(ONE, x) == x
    assert mul(R("1/3", q=1), R("1/3", q=-1)) == R("2/3")


def test_inv_examples():
    assert inv(ONE) == ONE
    assert inv(R("1/3")) == R("2/3")
    assert inv(R(0, q=2)) == R(0, q=-2)


def test_pow_examples():
    assert pow(R("1/4"), 2) == R("1/2")
    assert pow(R("3/7", q=5), 0) == ONE
    assert pow(R(0, q=F(1, 2)), 2) == R(0, q=1)


def test_canonical_root_examples():
    assert canonical_root(R("1/2"), 2) == R("1/4")
    assert canonical_root(ONE, 5) == ONE
    assert canonical_root(R(0, q=1), 3) == R(0, q=F(1, 3))


def test_is_sign():
    assert is_sign(ONE) == 1
    assert is_sign(R("1/2")) == -1
    assert is_sign(R("1/3")) is None
    assert is_sign(R("1/2", q=1)) is None


def test_normalization():
    assert R("3/2") == R("1/2")
    assert R("-1/3") == R("2/3")
    assert R(0, q=0) == ONE
    assert hash(R("5/4", q=1)) == hash(R("1/4", q=1))
    with pytest.raises(ValueError):
        RootScalar(0, {"": 1})
    with pytest.raises(TypeError):
        RootScalar(0.5)


def test_solve_root_constraints_examples():
    # enumeration oracle: candidates 1/4 and 3/4 both satisfy; the smallest j wins
    assert enumerate_root_solutions(2, R("1/2"), 2, R("1/2")) == [R("1/4"), R("3/4")]
    assert solve_root_constraints(2, R("1/2"), 2, R("1/2")) == R("1/4")
    x = R("2/7", q=3)
    assert solve_root_constraints(1, x, 1, x) == x
    with pytest.raises(IncompatibleConstraints):
        solve_root_constraints(2, R("1/2"), 3, R("1/3"))


def test_solve_root_constraints_no_solution():
    # x^2 = 1 and x^2 = -1 are compatible (1^2 == (-1)^2) but contradictory
    assert enumerate_root_solutions(2, ONE, 2, MINUS_ONE) == []
    with pytest.raises(NoSolution):
        solve_root_constraints(2, ONE, 2, MINUS_ONE)


@given(scalars, st.integers(1, 30))
def test_root_then_power(a, n):
    assert canonical_root(a, n) ** n == a
    assert canonical_root(a, n).torsion < F(1, n)


@given(scalars, scalars, scalars)
def test_group_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert inv(inv(a)) == a
    assert a * inv(a) == ONE


@given(st.integers(1, 30))
def test_root_of_identity(n):
    assert canonical_root(ONE, n) == ONE


@given(scalars, st.integers(1, 12), st.integers(1, 12))
def test_solve_matches_enumeration(x, r, n):
    A, B = x ** r, x ** n
    got = solve_root_constraints(r, A, n, B)
    assert got ** r == A and got ** n == B
    assert got == enumerate_root_solutions(r, A, n, B)[0]
