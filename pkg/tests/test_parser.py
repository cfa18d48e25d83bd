from __future__ import annotations

import random

import pytest

from qminkowski.algebra import AlgebraId, NCPoly, random_poly, to_text
from qminkowski.parser import (
    BinOp,
    Num,
    ParseError,
    Pow,
    Sym,
    UnknownSymbol,
    parse_column,
    parse_expr,
    parse_poly,
)
from qminkowski.scalars import TWO_Q, qpow

R3, R4 = AlgebraId.R3, AlgebraId.R4


def test_ast_shapes():
    assert parse_expr("b", R3) == Sym("b", 1, 1)
    node = parse_expr("2*b^3", R3)
    assert isinstance(node, BinOp) and node.left == Num(2) and isinstance(node.right, Pow)


def test_precedence():
    assert parse_poly("2*b^2", R3) == parse_poly("2*(b*b)", R3)
    assert parse_poly("-b^2", R3) == -(parse_poly("b", R3) ** 2)
    assert parse_poly("b + h*c", R3) == parse_poly("b", R3) + parse_poly("h*c", R3)
    assert parse_poly("b - h - c", R3) == parse_poly("b - (h + c)", R3)


def test_noncommutative_products():
    assert parse_poly("c*b", R3) != parse_poly("b*c", R3)


def test_scalars():
    assert parse_poly("2_q", R3) == NCPoly.const(R3, TWO_Q)
    assert parse_poly("q^-2", R3) == NCPoly.const(R3, qpow(-2))
    assert parse_poly("b/(q + 1)", R3) == NCPoly.gen(R3, "b").scale(1 / (qpow(1) + 1))
    assert parse_poly("r^2/r", R3) == NCPoly.const(R3, 1).r_shift(1)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("x", "unknown symbol 'x'"),
        ("b c", "missing '*'"),
        ("2b", "missing '*'"),
        ("b +", "unexpected"),
        ("(b", "expected ')'"),
        ("b^h", "exponent must be an integer"),
        ("b/h", "division is only allowed by scalars"),
        ("b^-1", "division is only allowed by scalars"),
        ("b/0", "division by zero"),
        ("", "empty expression"),
        ("b $ c", "unexpected character"),
        ("b^2^3", "chained exponents"),
    ],
)
def test_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, R3)
    assert fragment in str(exc.value)


def test_error_positions():
    with pytest.raises(UnknownSymbol) as exc:
        parse_poly("b +\n  l", R3)
    assert (exc.value.line, exc.value.col) == (2, 3)
    with pytest.raises(ParseError) as exc:
        parse_poly("b*h h", R3)
    assert exc.value.col == 5


def test_l_and_ad_generators():
    assert parse_poly("l", R4) == NCPoly.gen(R4, "l")
    with pytest.raises(UnknownSymbol):
        parse_poly("l", R3)
    # quantum relation q a b - q^-1 b a = 0
    assert parse_poly("q*a*b - q^-1*b*a", R4).is_zero()


@pytest.mark.parametrize("alg", list(AlgebraId))
def test_round_trip(alg):
    rng = random.Random(17)
    for _ in range(200):
        f = random_poly(alg, rng, 3)
        text = to_text(f)
        g = parse_poly(text, alg)
        assert g == f
        assert to_text(g) == text


def test_column():
    col = parse_column("b; h*c; 0", R3)
    assert len(col) == 3 and col[2].is_zero()
