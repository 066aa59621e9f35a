import random

import pytest

from lievessiot.errors import (BadBlockSize, DimensionMismatch,
                               PrincipalMinorVanishes, Singular)
from lievessiot.matrix import MatK
from lievessiot.parsing import parse_matrix
from lievessiot.ratfunc import RF_ONE, RF_T, RF_ZERO, RatFunc

from support import rand_invertible, rand_poly_matrix


def test_constructors_and_indexing():
    m = parse_matrix("[1, t; 0, 2]")
    assert m.rows == 2 and m.cols == 2
    assert m[0, 1] == RF_T
    assert MatK.identity(3)[2, 2] == RF_ONE
    assert MatK.zero(2, 3).is_zero()


def test_ring_axioms_random():
    rng = random.Random(21)
    for _ in range(40):
        a = rand_poly_matrix(rng, 3, 2)
        b = rand_poly_matrix(rng, 3, 2)
        c = rand_poly_matrix(rng, 3, 2)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert (a * b).transpose() == b.transpose() * a.transpose()
        assert (a - a).is_zero()


def test_dimension_mismatch():
    a = MatK.identity(2)
    b = MatK.identity(3)
    with pytest.raises(DimensionMismatch):
        a + b
    with pytest.raises(DimensionMismatch):
        a * b


def test_det_multiplicative():
    rng = random.Random(22)
    for _ in range(25):
        a = rand_poly_matrix(rng, 3, 2)
        b = rand_poly_matrix(rng, 3, 2)
        assert (a * b).det() == a.det() * b.det()


def test_inverse_random():
    rng = random.Random(23)
    for n in (2, 3, 4):
        for _ in range(8):
            a = rand_invertible(rng, n, 2)
            assert a * a.inverse() == MatK.identity(n)
            assert a.inverse() * a == MatK.identity(n)


def test_singular_inverse_raises():
    m = parse_matrix("[1, 1; 1, 1]")
    with pytest.raises(Singular):
        m.inverse()
    assert m.det().is_zero()


def test_derive_product_rule():
    rng = random.Random(24)
    for _ in range(20):
        a = rand_poly_matrix(rng, 3, 2)
        b = rand_poly_matrix(rng, 3, 2)
        assert (a * b).derive() == a.derive() * b + a * b.derive()


def test_trace_and_bracket():
    rng = random.Random(25)
    for _ in range(20):
        a = rand_poly_matrix(rng, 3, 2)
        b = rand_poly_matrix(rng, 3, 2)
        br = a.lie_bracket(b)
        assert br == a * b - b * a
        assert br.trace() == RF_ZERO
        assert (a + b).trace() == a.trace() + b.trace()


def test_block_split_and_join_roundtrip():
    rng = random.Random(26)
    m = rand_poly_matrix(rng, 4, 1)
    for k in (1, 2, 3):
        a11, a12, a21, a22 = m.block_split(k)
        assert a11.rows == k and a22.rows == 4 - k
        assert MatK.block_join(a11, a12, a21, a22) == m
    with pytest.raises(BadBlockSize):
        m.block_split(0)
    with pytest.raises(BadBlockSize):
        m.block_split(4)


def test_lu_flag_decompose_example():
    m = parse_matrix("[1, 1; t, 1]")
    lower, upper = m.lu_flag_decompose()
    assert lower == parse_matrix("[1, 0; t, 1]")
    assert upper == parse_matrix("[1, 1; 0, 1 - t]")
    assert lower * upper == m


def test_lu_random_invariants():
    rng = random.Random(27)
    for n in (2, 3, 4):
        for _ in range(6):
            while True:
                m = rand_poly_matrix(rng, n, 2)
                if all(not mk.is_zero() for mk in m.principal_minors()):
                    break
            lower, upper = m.lu_flag_decompose()
            assert lower * upper == m
            for i in range(n):
                assert lower[i, i] == RF_ONE
                for j in range(i + 1, n):
                    assert lower[i, j].is_zero()
                for j in range(i):
                    assert upper[i, j].is_zero()


def test_lu_vanishing_minor_raises():
    m = parse_matrix("[0, 1; 1, 0]")
    with pytest.raises(PrincipalMinorVanishes) as exc:
        m.lu_flag_decompose()
    assert exc.value.k == 1


def test_principal_minors():
    m = parse_matrix("[1, 2; 3, 4]")
    minors = m.principal_minors()
    assert minors[0] == RF_ONE
    assert minors[1] == RatFunc.const(-2)


def test_scalar_multiplication():
    m = parse_matrix("[1, t; 0, 1]")
    assert RatFunc.const(2) * m == m + m
