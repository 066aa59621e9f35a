import random

import pytest

from lievessiot.errors import (DivisionByZeroFunction, ExprSyntaxError,
                               RaggedRows)
from lievessiot.parsing import (format_canonical, format_gaussian,
                                format_matrix, format_poly, format_ratfunc,
                                parse_gaussian, parse_matrix, parse_ratfunc)
from lievessiot.ratfunc import RF_ONE, RF_T, RatFunc
from lievessiot.scalars import GaussianRational, gq

from support import rand_gauss, rand_poly_matrix, rand_ratfunc


def test_basic_expressions():
    assert parse_ratfunc("t^2 + 1") == RF_T * RF_T + RF_ONE
    assert parse_ratfunc("(1 + i) * t") == RatFunc.const(gq(1, 1)) * RF_T
    assert parse_ratfunc("2/4") == RatFunc.const(gq("1/2"))
    assert parse_ratfunc("1/(t - 1) + 1/(t + 1)") == \
        RatFunc.const(2) * RF_T / (RF_T * RF_T - RF_ONE)


def test_power_binds_tighter_than_unary_minus():
    assert parse_ratfunc("-t^2") == -(RF_T * RF_T)
    assert parse_ratfunc("(-t)^2") == RF_T * RF_T
    assert parse_ratfunc("-2^2") == RatFunc.const(-4)


def test_precedence_and_associativity():
    assert parse_ratfunc("1 - 2 - 3") == RatFunc.const(-4)
    assert parse_ratfunc("2 + 3 * t") == RatFunc.const(2) + RatFunc.const(3) * RF_T
    assert parse_ratfunc("6 / 2 / 3") == RF_ONE
    assert parse_ratfunc("2 * t^2") == RatFunc.const(2) * RF_T ** 2


def test_syntax_errors_carry_position():
    with pytest.raises(ExprSyntaxError) as exc:
        parse_ratfunc("t + + 1 x")
    assert exc.value.position >= 0
    with pytest.raises(ExprSyntaxError):
        parse_ratfunc("t^t")
    with pytest.raises(ExprSyntaxError):
        parse_ratfunc("(t + 1")
    with pytest.raises(ExprSyntaxError):
        parse_ratfunc("t 1")


def test_division_by_zero_function():
    with pytest.raises(DivisionByZeroFunction):
        parse_ratfunc("1/(t - t)")


def test_matrix_parsing():
    m = parse_matrix("[1, t; t^2, i]")
    assert m.rows == 2 and m.cols == 2
    assert m[1, 0] == RF_T ** 2
    with pytest.raises(RaggedRows):
        parse_matrix("[1, 2; 3]")
    with pytest.raises(ExprSyntaxError):
        parse_matrix("[1, 2; 3, 4] extra")


def test_parse_gaussian():
    assert parse_gaussian("1/2 - 3*i") == gq("1/2", -3)
    with pytest.raises(ExprSyntaxError):
        parse_gaussian("t + 1")


def test_format_gaussian():
    assert format_gaussian(gq(0)) == "0"
    assert format_gaussian(gq(0, 1)) == "i"
    assert format_gaussian(gq(0, -1)) == "-i"
    assert format_gaussian(gq(1, 1)) == "1 + i"
    assert format_gaussian(gq("1/2", "-3/4")) == "1/2 - 3/4*i"


def test_format_parse_roundtrip_random():
    rng = random.Random(71)
    for _ in range(300):
        f = rand_ratfunc(rng, 3)
        assert parse_ratfunc(format_ratfunc(f)) == f


def test_format_parse_roundtrip_matrix():
    rng = random.Random(72)
    for _ in range(30):
        m = rand_poly_matrix(rng, 3, 2)
        assert parse_matrix(format_matrix(m)) == m


def test_format_canonical_dispatch():
    assert format_canonical(RF_T) == "t"
    assert format_canonical(gq(2)) == "2"
    assert format_canonical(parse_matrix("[1, 0; 0, 1]")) == "[1, 0; 0, 1]"
    with pytest.raises(TypeError):
        format_canonical(object())


def test_format_is_deterministic():
    rng = random.Random(73)
    for _ in range(50):
        f = rand_ratfunc(rng, 2)
        assert format_ratfunc(f) == format_ratfunc(parse_ratfunc(format_ratfunc(f)))
