"""Expression grammar: parser, printer, evaluation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kreinccr.algebra import HEISENBERG, HOLOMORPHIC, format_element, normal_order
from kreinccr.dsl import (Group, Num, Pow, Prod, Sum, Sym, infer_generators,
                          parse_expr, print_expr, to_element)
from kreinccr.exceptions import IncompatibleAlgebras, ParseError


def test_basic_shapes():
    assert parse_expr("d z") == Prod((Sym("d"), Sym("z")))
    assert parse_expr("a_1 a_2*") == Prod((Sym("a_1"), Sym("a_2*")))
    assert parse_expr("z^2") == Pow(Sym("z"), 2)
    assert parse_expr("1/2") == Num(Fraction(1, 2))
    assert parse_expr("3i") == Num(Fraction(3), imag=True)
    assert parse_expr("(z)") == Group(Sym("z"))
    ast = parse_expr("z + d - 1")
    assert isinstance(ast, Sum) and len(ast.tail) == 2


def test_star_binds_to_symbol():
    assert parse_expr("a* a") == Prod((Sym("a*"), Sym("a")))
    assert parse_expr("a * a") == Prod((Sym("a"), Sym("a")))
    assert parse_expr("a_12*") == Sym("a_12*")


def test_explicit_and_implicit_products_agree():
    assert parse_expr("2 z d") == parse_expr("2 * z * d")


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as e:
        parse_expr("z + ")
    assert e.value.offset == 4
    assert "(" in e.value.expected

    with pytest.raises(ParseError) as e:
        parse_expr("z ? d")
    assert e.value.offset == 2

    with pytest.raises(ParseError) as e:
        parse_expr("z^d")
    assert "uint" in e.value.expected

    with pytest.raises(ParseError) as e:
        parse_expr("z^1/2")
    assert "uint" in e.value.expected

    with pytest.raises(ParseError) as e:
        parse_expr("(z + d")
    assert ")" in e.value.expected

    with pytest.raises(ParseError):
        parse_expr("z) d")


def test_input_size_limit():
    with pytest.raises(ParseError):
        parse_expr("z " * 40000)


def test_evaluation():
    x = to_element(parse_expr("d z"))
    assert format_element(normal_order(x)) == "z d + 1"
    y = to_element(parse_expr("(1/2) (d^2 - z^2)"))
    z = to_element(parse_expr("1/2 d^2 - 1/2 z^2"))
    assert y == z
    w = to_element(parse_expr("2i z - 1i z"))
    assert format_element(w) == "1i z"


def test_generator_inference():
    assert infer_generators(parse_expr("z d")) is HOLOMORPHIC
    assert infer_generators(parse_expr("a* a")) is HEISENBERG
    assert infer_generators(parse_expr("a_1 a_2*")).kind == "multimode"
    assert infer_generators(parse_expr("1/2")) is HOLOMORPHIC
    with pytest.raises(IncompatibleAlgebras):
        infer_generators(parse_expr("z a"))


def _random_ast(rng, depth=0):
    def atom():
        r = rng.random()
        if r < 0.3:
            return Num(Fraction(rng.randint(0, 9), rng.randint(1, 9)),
                       rng.random() < 0.3)
        if r < 0.75 or depth > 3:
            return Sym(rng.choice(["z", "d", "a", "a*", "a_1", "a_2*", "a_10"]))
        return Group(_random_ast(rng, depth + 1))

    def factor():
        a = atom()
        return Pow(a, rng.randint(0, 5)) if rng.random() < 0.3 else a

    def term():
        n = rng.randint(1, 3)
        fs = tuple(factor() for _ in range(n))
        return fs[0] if n == 1 else Prod(fs)

    n = rng.randint(0, 2)
    head = term()
    if n == 0:
        return head
    return Sum(head, tuple((rng.choice("+-"), term()) for _ in range(n)))


def test_print_parse_round_trip_1000():
    rng = random.Random(11)
    for _ in range(1000):
        ast = _random_ast(rng)
        assert parse_expr(print_expr(ast)) == ast


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_round_trip_property(seed):
    rng = random.Random(seed)
    ast = _random_ast(rng)
    assert parse_expr(print_expr(ast)) == ast
