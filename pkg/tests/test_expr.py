from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylbundles.config import preset
from weylbundles.expr import (
    Gen,
    Num,
    ParseError,
    Pow,
    Prod,
    Sum,
    evaluate,
    gens_used,
    parse,
)
from weylbundles.sampling import random_amb_elem, random_gwa_elem


def test_parse_product():
    node = parse("y*x")
    assert node == Sum(((1, Prod((Gen("y"), Gen("x")))),))


def test_parse_power_and_scaled_sum():
    node = parse("x^2*(1 - 3/2*z)")
    (sign, term), = node.terms
    assert sign == 1
    power, inner = term.factors
    assert power == Pow(Gen("x"), 2)
    (s1, t1), (s2, t2) = inner.terms
    assert (s1, t1) == (1, Prod((Num(Fraction(1)),)))
    assert s2 == -1 and t2 == Prod((Num(Fraction(3, 2)), Gen("z")))


def test_whitespace_insensitive():
    assert parse(" y * x ") == parse("y*x")


def test_leading_minus_allowed():
    assert parse("-z + 1") == Sum(((-1, Prod((Gen("z"),))), (1, Prod((Num(Fraction(1)),)))))


@pytest.mark.parametrize("bad", ["x^-1", "x*", "(x", "x +", "", "x^1/2", "3//4"])
def test_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse("x + %")
    assert "position" in str(err.value)


def test_gens_used():
    assert gens_used(parse("x^2*(1 - 3/2*z) + y")) == {"x", "y", "z"}
    assert gens_used(parse("3/4")) == set()


def test_evaluate_in_gwa(sphere_gwa):
    alg = sphere_gwa
    atoms = {"x": alg.x(), "y": alg.y(), "z": alg.z()}
    node = parse("y*x")
    assert evaluate(node, atoms, alg.from_scalar) == alg.from_poly(alg.p)
    assert evaluate(parse("x^0"), atoms, alg.from_scalar) == alg.one()


def test_evaluate_unknown_generator(sphere_gwa):
    alg = sphere_gwa
    with pytest.raises(ParseError, match="unknown generator"):
        evaluate(parse("w + x"), {"x": alg.x()}, alg.from_scalar)


def _gwa_atoms(alg):
    return {"x": alg.x(), "y": alg.y(), "z": alg.z()}


def _amb_atoms(amb):
    return {"xp": amb.x_plus(), "xm": amb.x_minus(),
            "zp": amb.z_plus(), "zm": amb.z_minus()}


def test_print_parse_roundtrip_gwa(sphere_gwa):
    rng = Random(21)
    atoms = _gwa_atoms(sphere_gwa)
    for _ in range(40):
        e = random_gwa_elem(sphere_gwa, rng)
        back = evaluate(parse(str(e)), atoms, sphere_gwa.from_scalar)
        assert back == e, str(e)


def test_print_parse_roundtrip_ambient(kleinian):
    amb = kleinian.ambient_algebra()
    rng = Random(22)
    atoms = _amb_atoms(amb)
    for _ in range(40):
        e = random_amb_elem(amb, rng)
        back = evaluate(parse(str(e)), atoms, lambda c: amb.one() * c)
        assert back == e, str(e)


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(
    st.integers(-2, 2),
    st.dictionaries(st.integers(0, 4),
                    st.fractions(min_value=-4, max_value=4, max_denominator=5),
                    min_size=1, max_size=3),
    min_size=1, max_size=3,
))
def test_roundtrip_property(terms):
    from weylbundles.poly import UniPoly

    alg = preset("sphere").gwa_algebra()
    e = alg.elem({d: UniPoly(cs) for d, cs in terms.items()})
    back = evaluate(parse(str(e)), _gwa_atoms(alg), alg.from_scalar)
    assert back == e
