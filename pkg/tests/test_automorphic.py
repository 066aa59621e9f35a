import random

import pytest

from lievessiot.automorphic import (AutomorphicField, GroupElement, adjoint,
                                    check_automorphic_solution,
                                    gauge_transform, is_in_subalgebra,
                                    log_deriv)
from lievessiot.errors import DimensionMismatch, Singular
from lievessiot.matrix import MatK
from lievessiot.parsing import parse_matrix

from support import rand_invertible


def test_group_element_rejects_singular():
    with pytest.raises(Singular):
        GroupElement(parse_matrix("[1, 1; 1, 1]"))


def test_log_deriv_example():
    sigma = GroupElement(parse_matrix("[1, t; 0, 1]"))
    assert log_deriv(sigma).matrix == parse_matrix("[0, 1; 0, 0]")


def test_log_deriv_constant_is_zero():
    sigma = GroupElement(parse_matrix("[2, 1; 1, 1]"))
    assert log_deriv(sigma).matrix.is_zero()


def test_cocycle_law_random():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.choice((2, 3))
        sigma = GroupElement(rand_invertible(rng, n, 1))
        tau = GroupElement(rand_invertible(rng, n, 1))
        lhs = log_deriv(sigma * tau).matrix
        rhs = log_deriv(sigma).matrix + adjoint(sigma, log_deriv(tau)).matrix
        assert lhs == rhs


def test_inverse_law_random():
    rng = random.Random(32)
    for _ in range(30):
        n = rng.choice((2, 3))
        sigma = GroupElement(rand_invertible(rng, n, 2))
        inv = sigma.inverse()
        assert log_deriv(inv).matrix == -adjoint(inv, log_deriv(sigma)).matrix


def test_gauge_transform_is_group_action():
    rng = random.Random(33)
    for _ in range(20):
        n = rng.choice((2, 3))
        a = AutomorphicField(rand_invertible(rng, n, 1))
        tau1 = GroupElement(rand_invertible(rng, n, 1))
        tau2 = GroupElement(rand_invertible(rng, n, 1))
        once = gauge_transform(tau1, gauge_transform(tau2, a))
        composed = gauge_transform(tau1 * tau2, a)
        assert once == composed


def test_gauge_by_solution_trivializes():
    rng = random.Random(34)
    for _ in range(20):
        n = rng.choice((2, 3))
        sigma = GroupElement(rand_invertible(rng, n, 2))
        a = log_deriv(sigma)
        # gauging by sigma^{-1} pulls the field back to zero
        b = gauge_transform(sigma.inverse(), a)
        assert b.matrix.is_zero()
        assert check_automorphic_solution(a, sigma)


def test_check_automorphic_solution_false():
    a = AutomorphicField(parse_matrix("[0, 1; 0, 0]"))
    sigma = GroupElement(parse_matrix("[1, 0; t, 1]"))
    assert not check_automorphic_solution(a, sigma)


def test_is_in_subalgebra_shapes():
    skew = AutomorphicField(parse_matrix("[0, t; -t, 0]"))
    assert is_in_subalgebra(skew, "skew_symmetric")
    assert is_in_subalgebra(skew, "trace_zero")
    upper = AutomorphicField(parse_matrix("[1, t; 0, 2]"))
    assert is_in_subalgebra(upper, "upper_triangular")
    assert not is_in_subalgebra(upper, "trace_zero")
    block = AutomorphicField(parse_matrix("[1, t, 1; 0, 2, 0; 0, 1, 1]"))
    assert is_in_subalgebra(block, "block_upper", m=1)
    assert not is_in_subalgebra(block, "upper_triangular")


def test_size_mismatch_raises():
    a = AutomorphicField(MatK.identity(2))
    tau = GroupElement(MatK.identity(3))
    with pytest.raises(DimensionMismatch):
        gauge_transform(tau, a)
    with pytest.raises(DimensionMismatch):
        adjoint(tau, a)
