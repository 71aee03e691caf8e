import random

import pytest

from adereduce import (
    AdeError,
    MPoly,
    discriminant,
    divides,
    elementary_symmetric,
    resultant,
    substitute,
    sylvester_matrix,
)

x, y = MPoly.var("x"), MPoly.var("y")
p, q = MPoly.var("p"), MPoly.var("q")


def test_parse_and_format() -> None:
    f = MPoly.parse("(x + 1)^2")
    assert "x^2 + 2*x + 1" == str(f)
    assert x**2 + 2 * x + 1 == f
    assert "MPoly('x^2 + 2*x + 1')" == repr(f)
    assert "0" == str(MPoly())
    assert "-y" == str(-y)


@pytest.mark.parametrize("text", ["x/2", "sin(x)", "x**0.5"])
def test_parse_rejects_non_polynomials(text: str) -> None:
    with pytest.raises(AdeError):
        MPoly.parse(text)


def test_variables_are_in_name_order() -> None:
    assert ("a2", "a10", "b1") == MPoly.parse("b1 + a10 + a2").variables
    # Variables whose terms cancel are dropped
    assert ("y",) == (x + y - x).variables


def test_constructor_checks_names_and_exponents() -> None:
    with pytest.raises(AdeError):
        MPoly(("x", "x"), {(1, 0): 1})
    with pytest.raises(AdeError):
        MPoly(("1x",), {(1,): 1})
    with pytest.raises(AdeError):
        MPoly(("x",), {(1, 1): 1})


def test_integers_mix_with_polynomials() -> None:
    assert 3 == MPoly.const(3)
    assert 3 == int(MPoly.const(3))
    assert x - x == 0
    assert 2 - x == -(x - 2)
    assert MPoly.const(1) == x**0
    with pytest.raises(AdeError):
        int(x)
    with pytest.raises(AdeError):
        x**-1


def test_equal_polynomials_hash_alike() -> None:
    assert hash(MPoly.parse("x + y")) == hash(MPoly.parse("y + x"))
    assert 1 == len({x * y, y * x})


def test_degree_coefficient_derivative() -> None:
    f = MPoly.parse("x^2*y + 3*x + 5")
    assert 3 == f.degree()
    assert 2 == f.degree("x")
    assert 0 == f.degree("z")
    assert -1 == MPoly().degree()
    assert y == f.coefficient("x", 2)
    assert 3 == f.coefficient("x", 1)
    assert f == f.coefficient("z", 0)
    assert 2 * x * y + 3 == f.derivative("x")
    assert 0 == f.derivative("z")


def test_evaluate() -> None:
    assert "y + 4" == str((x**2 + y).evaluate({"x": 2}))
    assert 5 == (x**2 + y).evaluate({"x": 2, "y": 1})


def test_json_document() -> None:
    f = MPoly.parse("x^2 - 3")
    assert {"variables": ["x"], "terms": [[[2], 1], [[0], -3]]} == f.to_json()
    assert f == MPoly.from_json(f.to_json())
    with pytest.raises(AdeError):
        MPoly.from_json({"terms": []})


def test_elementary_symmetric() -> None:
    names = ["a1", "a2", "a3"]
    assert 1 == elementary_symmetric(0, names)
    assert "a1 + a2 + a3" == str(elementary_symmetric(1, names))
    assert "a1*a2*a3" == str(elementary_symmetric(3, names))
    with pytest.raises(AdeError):
        elementary_symmetric(4, names)


def test_sylvester_matrix() -> None:
    f = x**2 + p * x + q
    rows = sylvester_matrix(f, f.derivative("x"), "x")
    assert [[1, p, q], [2, p, 0], [0, 2, p]] == rows


def test_resultant_of_linear_factors() -> None:
    a, b = MPoly.var("a"), MPoly.var("b")
    assert a - b == resultant(x - a, x - b, "x")
    assert 0 == resultant(x - 1, x**2 - 1, "x")
    assert -3 == resultant(x - 1, x**2 - 4, "x")


def test_resultant_rejects_zero() -> None:
    with pytest.raises(AdeError):
        resultant(MPoly(), x, "x")


def test_discriminant_of_quadratic_and_cubic() -> None:
    assert "p^2 - 4*q" == str(discriminant(x**2 + p * x + q, "x"))
    cubic = MPoly.parse("x^3 + p*x + q")
    assert -4 * p**3 - 27 * q**2 == discriminant(cubic, "x")


def test_discriminant_is_product_of_squared_differences() -> None:
    a1, a2, a3 = MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3")
    f = (x - a1) * (x - a2) * (x - a3)
    expected = ((a1 - a2) * (a1 - a3) * (a2 - a3)) ** 2
    assert expected == discriminant(f, "x")


def test_discriminant_needs_monic_input() -> None:
    with pytest.raises(AdeError):
        discriminant(2 * x**2 + 1, "x")
    with pytest.raises(AdeError):
        discriminant(y + 1, "x")


def test_substitute() -> None:
    f = MPoly.parse("t1*x + t2")
    image = substitute(f, {"t1": y + 1, "t2": 3, "unused": 7})
    assert x * y + x + 3 == image
    assert f is substitute(f, {"z": 1})


def test_divides() -> None:
    assert divides(x - 1, x**2 - 1)
    assert not divides(x - 1, x**2 + 1)
    assert not divides(2 * x, x**2)
    assert divides(x + y, (x + y) ** 3 * (x - y))
    with pytest.raises(AdeError):
        divides(MPoly(), x)


def test_substitute_zero() -> None:
    assert 1 == substitute(x + 1, {"x": 0})
    assert 1 == substitute(x * y + 1, {"x": 0})
    assert y == (x + y).evaluate({"x": 0})
    assert 0 == (x**2 * y).evaluate({"x": 0, "y": 5})
    assert 7 == MPoly.parse("x^3 + 7").evaluate({"x": 0})


def random_poly(rng: random.Random) -> MPoly:
    f = MPoly()
    for _ in range(rng.randint(1, 4)):
        f = f + rng.randint(-5, 5) * x ** rng.randint(0, 3) * y ** rng.randint(0, 2)
    return f


@pytest.mark.parametrize("seed", range(10))
def test_ring_axioms(seed: int) -> None:
    rng = random.Random(seed)
    f, g, h = (random_poly(rng) for _ in range(3))
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f - f == 0
    assert f == MPoly.parse(str(f))


def test_resultant_is_multiplicative() -> None:
    f = x - p
    g = x**2 + q
    h = x**2 + p * x + 1
    assert resultant(f * g, h, "x") == resultant(f, h, "x") * resultant(g, h, "x")
    assert resultant(h, f * g, "x") == resultant(h, f, "x") * resultant(h, g, "x")
