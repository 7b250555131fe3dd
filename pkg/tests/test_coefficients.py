from fractions import Fraction

import pytest
from hypothesis import given

from ncsuper.coefficients import ONE, ZERO, Poly, c0, c1, c2, format_poly, h
from ncsuper.expr import parse_in
from ncsuper.presentations import superspace
from strategies import nonzero_fraction, polys, rationals


def test_symbols_and_constants():
    assert str(h) == "h"
    assert Poly.const(0) == ZERO and not ZERO
    assert Poly.const(1) == ONE == 1
    with pytest.raises(KeyError):
        Poly.symbol("q")


def test_difference_of_squares():
    assert (h + 1) * (h - 1) == h**2 - 1


def test_zero_terms_are_dropped():
    assert Poly({(0, 0, 0, 0): 0, (1, 0, 0, 0): 2}).terms == {(1, 0, 0, 0): Fraction(2)}
    assert (h - h).terms == {}


def test_division_only_by_nonzero_rationals():
    assert h / 2 == Fraction(1, 2) * h
    assert h / Poly.const(4) == h * Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        h / 0
    with pytest.raises(ValueError):
        h / h


def test_power_rejects_negative():
    with pytest.raises(ValueError):
        h ** -1


def test_torsion_coefficient_vanishes_when_bound():
    assert (c1 + c2).substitute(c2=-c1) == 0


def test_substitute_unknown_symbol():
    with pytest.raises(KeyError):
        h.substitute(q=1)


@pytest.mark.parametrize(
    "poly, text",
    [(ZERO, "0"), (-h / 2, "-(1/2)*h"), (h**2 - 1, "h^2 - 1"), (c0 * c1 - 3, "c0*c1 - 3")],
)
def test_format(poly, text):
    assert format_poly(poly) == text


def test_constant_queries():
    assert Poly.const(Fraction(3, 2)).constant_value() == Fraction(3, 2)
    assert ZERO.constant_value() == 0
    with pytest.raises(ValueError):
        h.constant_value()
    assert (h * c0**2).degree() == 3 and (h * c0**2).degree("c0") == 2
    assert (h + c1).symbols() == {"h", "c1"}


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p and p + ZERO == p


@given(polys, polys)
def test_canonical_equality(p, q):
    assert (p == q) == (p.terms == q.terms)
    if p == q:
        assert hash(p) == hash(q)


@given(polys, polys, rationals, rationals)
def test_substitute_is_a_ring_map(p, q, a, b):
    bind = {"h": a, "c1": b}
    assert p.substitute() == p
    assert (p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind)
    assert (p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind)


@given(polys, polys)
def test_substitute_poly_values(p, q):
    assert (p * q).substitute(c2=-c1) == p.substitute(c2=-c1) * q.substitute(c2=-c1)


@given(polys, nonzero_fraction())
def test_division_inverts_scaling(p, q):
    assert (p * q) / q == p


@given(polys)
def test_format_round_trip(p):
    assert parse_in(format_poly(p), superspace()).scalar_part() == p
