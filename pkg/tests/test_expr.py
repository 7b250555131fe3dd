import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncsuper.coefficients import h
from ncsuper.expr import ParseError, format_element, parse_expression, parse_in, tokenize
from ncsuper.geometry import metric_eval
from ncsuper.presentations import MACROS, forms, superspace
from strategies import elements_of


def test_normalize_example():
    ss = superspace()
    value = parse_expression("x*theta1", "superspace")
    assert value == ss.word("theta1", "x") + h * ss.word("x", "theta2")


def test_theta2_square():
    assert parse_expression("theta2^2", "superspace").is_zero()


def test_varpi_parses():
    value = parse_expression("rho ox rho", "forms")
    rho = parse_in("rho", forms(), MACROS)
    assert value == rho * rho


@pytest.mark.parametrize(
    "text, algebra, printed",
    [
        ("0", "superspace", "0"),
        ("phi", "superspace", "x*x - 2*theta1*theta2"),
        ("theta1*x", "superspace", "theta1*x"),
        ("-(1/2)*h", "superspace", "-(1/2)*h"),
        ("xi1 /\\ eta", "wedge", "xi1 /\\ eta"),
        ("theta1*xi1 ox eta", "forms", "theta1*xi1 ox eta"),
        ("(1 + h)*x", "superspace", "(h + 1)*x"),
    ],
)
def test_format(text, algebra, printed):
    assert format_element(parse_expression(text, algebra)) == printed


def test_metric_value_prints():
    pair = forms().gen("xi1") * forms().gen("xi1")
    assert format_element(metric_eval(pair)) == "-(1/2)*h"


def test_omega21_prints_wedge_first():
    value = parse_expression("xi1 ox eta ox xi2", "omega21")
    text = format_element(value, wedge_slots=2)
    assert text == "xi1 /\\ eta ox xi2"
    assert parse_expression(text, "omega21") == value


@pytest.mark.parametrize(
    "text, algebra",
    [
        ("x +", "superspace"),
        ("x * (theta1", "superspace"),
        ("x # y", "superspace"),
        ("zeta", "superspace"),
        ("x^theta1", "superspace"),
        ("x / x", "superspace"),
        ("x / 0", "superspace"),
        ("xi1 ox eta", "wedge"),
        ("xi1 /\\ eta", "forms"),
        ("x ox eta", "forms"),
        ("xi1 /\\ 2", "wedge"),
        ("xi1 ox eta", "omega21"),
        ("alpha", "superspace"),
    ],
)
def test_parse_errors(text, algebra):
    with pytest.raises(ParseError):
        parse_expression(text, algebra)


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse_expression("x + # ", "superspace")
    assert exc.value.position == 4


def test_tokens():
    kinds = [t[0] for t in tokenize("xi1 ox eta /\\ xi2 ^ 2")]
    assert kinds == ["ident", "ox", "ident", "op", "ident", "op", "num", "end"]


def test_macros_expand_in_group():
    assert parse_expression("e", "group") == parse_expression("1 + alpha*delta - (1/2)*h*a*c", "group")


def test_recursive_macro_rejected():
    with pytest.raises(ParseError):
        parse_in("loop", superspace(), {"loop": "x + loop"})


ROUNDTRIP_ALGEBRAS = ["superspace", "calculus", "group", "forms", "wedge"]


@settings(max_examples=60)
@given(st.sampled_from(ROUNDTRIP_ALGEBRAS).flatmap(lambda a: st.tuples(st.just(a), elements_of(parse_expression("1", a).algebra))))
def test_round_trip(case):
    algebra_id, value = case
    assert parse_expression(format_element(value), algebra_id) == value
