import doctest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import crhecke.poly
from crhecke.poly import NotDivisible, ParamSpec, ParamSpecMismatch, Poly, PolyParseError, index_sum_residue, specialize_rho

NAMES = ("xi1", "xi2", "xi3")

monos = st.lists(st.tuples(st.sampled_from(NAMES), st.integers(1, 3)), max_size=3).map(
    lambda ps: tuple(sorted(dict(ps).items()))
)
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=4).map(Poly)


def test_doctests():
    assert doctest.testmod(crhecke.poly).failed == 0


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(polys)
def test_str_parse_round_trip(p):
    assert Poly.parse(str(p)) == p


@given(polys)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


@settings(max_examples=50)
@given(polys, polys)
def test_divexact_inverts_multiplication(p, q):
    if q:
        assert (p * q).divexact(q) == p


def test_divexact_rejects_non_multiples():
    x1, x2 = Poly.var("xi1"), Poly.var("xi2")
    with pytest.raises(NotDivisible):
        (x1 + 1).divexact(x2)
    with pytest.raises(NotDivisible):
        Poly.const(3).divexact(2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+xi1*xi2", "xi1*xi2 + 1"),
        ("xi1*(xi1+xi2^2)", "xi1*xi2^2 + xi1^2"),
        ("-(xi2)^2", "-xi2^2"),
        ("0", "0"),
        ("2*xi_s - xi_s", "xi_s"),
    ],
)
def test_parse_examples(text, expected):
    assert str(Poly.parse(text)) == expected


@pytest.mark.parametrize("text", ["xi1+", "(xi1", "xi1^x", "3**2"])
def test_parse_errors(text):
    with pytest.raises(PolyParseError):
        Poly.parse(text)


def test_specialization_and_constant_term():
    p = Poly.parse("3 + xi1 - 2*xi1*xi2")
    assert specialize_rho(p) == 3
    assert p.evaluate({"xi1": 1, "xi2": 1}) == 2


@pytest.mark.parametrize(
    "text, m, residue",
    [("xi1*xi2", 3, 0), ("xi2^2 + xi1", 3, 1), ("xi1 + xi2", 3, None), ("1", 4, 0)],
)
def test_index_sum_residue(text, m, residue):
    assert index_sum_residue(Poly.parse(text), m) == residue


def test_param_spec_validation_and_mixing():
    a = ParamSpec((("xi1", "s", 1), ("xi2", "s", 2)), (("s", 3),))
    b = ParamSpec((("xi_s", "s", 1),), (("s", 2),))
    assert a.xi("s", 0) == 1
    assert a.xi("s", 2) == Poly.var("xi2")
    with pytest.raises(ValueError):
        ParamSpec((("xi3", "s", 3),), (("s", 3),))
    with pytest.raises(ParamSpecMismatch):
        Poly.var("xi1", a) + Poly.var("xi_s", b)


def test_tex():
    assert Poly.parse("xi1^2 - 3*xi2 + 1").to_tex() == r"\xi_{1}^2 - 3\xi_{2} + 1"
