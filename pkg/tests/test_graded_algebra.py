import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncsuper.algebra import (
    GeneratorTable,
    NormalizationError,
    Presentation,
    PresentationError,
    graded_commutator,
)
from ncsuper.coefficients import Poly, h
from ncsuper.presentations import calculus, combined, forms, get_algebra, group, superspace, wedge
from strategies import elements_of


def test_superspace_normalize_examples():
    ss = superspace()
    theta1, x, theta2 = ss.gens("theta1", "x", "theta2")
    assert x * theta1 == theta1 * x + h * (x * theta2)
    assert theta2 * theta2 == 0
    assert theta2 * theta1 == -(theta1 * theta2)
    assert theta1 * theta1 == -(h / 2) * (x * x) + h * (theta1 * theta2)


def test_graded_commutator_signs():
    ss = superspace()
    theta1, x, theta2 = ss.gens("theta1", "x", "theta2")
    assert graded_commutator(theta1, theta2) == theta1 * theta2 + theta2 * theta1
    assert graded_commutator(theta1, x) == -h * (x * theta2)


def test_parity_of_words_and_elements():
    ss = superspace()
    assert ss.table.word_parity(("theta1", "x", "theta2")) == 0
    assert ss.word("theta1", "x").parity() == 1
    with pytest.raises(ValueError):
        (ss.gen("theta1") + ss.gen("x")).parity()


def test_generator_table_validation():
    with pytest.raises(PresentationError):
        GeneratorTable([("a", 0), ("a", 1)])
    with pytest.raises(PresentationError):
        GeneratorTable([("a", 2)])
    with pytest.raises(KeyError):
        GeneratorTable([("a", 0)])["b"]


def test_rules_must_decrease_and_keep_parity():
    table = GeneratorTable([("u", 0), ("v", 1)])
    with pytest.raises(PresentationError):
        Presentation("bad", table, [(("u", "v"), {("v", "u"): 1})])
    with pytest.raises(PresentationError):
        Presentation("bad", table, [(("v", "u"), {("u", "u"): 1})])
    with pytest.raises(PresentationError):
        Presentation("bad", table, [(("u",), {(): 1})])


def test_step_budget_stops_runaway_rules(monkeypatch):
    table = GeneratorTable([("u", 0), ("v", 0)])
    loop = Presentation("loop", table, [(("v", "u"), {("u", "v"): 1}), (("u", "v"), {("v", "u"): 1})], check_order=False)
    with pytest.raises(NormalizationError):
        loop.word("v", "u")
    monkeypatch.setenv("NCSUPER_STEP_BUDGET", "5")
    long = superspace().free().element({("x", "theta1") * 3: 1})
    with pytest.raises(NormalizationError):
        superspace().normalize(long)


def test_bad_budget_value(monkeypatch):
    monkeypatch.setenv("NCSUPER_STEP_BUDGET", "lots")
    with pytest.raises(PresentationError):
        superspace().word("x", "theta1")


def test_from_relations_orients_by_leading_word():
    table = GeneratorTable([("u", 0), ("v", 0)])
    free = Presentation("free", table)
    u, v = free.gens("u", "v")
    pres = Presentation.from_relations("comm", table, [v * u - u * v - 1])
    assert set(pres.rules) == {("v", "u")}
    assert pres.word("v", "u") == pres.word("u", "v") + 1


def test_from_relations_rejects_polynomial_leading_coefficient():
    table = GeneratorTable([("u", 0), ("v", 0)])
    free = Presentation("free", table)
    u, v = free.gens("u", "v")
    with pytest.raises(PresentationError):
        Presentation.from_relations("bad", table, [h * (v * u) - u * v])


@pytest.mark.parametrize(
    "algebra_id, rules, overlaps",
    [
        ("superspace", 5, 7),
        ("forms", 14, 22),
        ("wedge", 18, 38),
        ("calculus", 41, 129),
        ("group", 18, 38),
        ("combined", 113, 575),
        ("combined-forms", 68, 252),
    ],
)
def test_confluence(algebra_id, rules, overlaps):
    pres = get_algebra(algebra_id)
    report = pres.check_confluence()
    assert len(pres.rules) == rules
    assert len(report.overlaps) == overlaps
    assert report.ok, str(report)


def test_sign_flipped_rule_breaks_confluence():
    ss = superspace()
    broken = ss.with_rules(replace={("theta2", "theta2"): {(): 1}})
    assert not broken.check_confluence().ok


@pytest.mark.parametrize("algebra_id", ["superspace", "forms", "wedge", "calculus", "group", "combined"])
def test_rules_preserve_parity_and_decrease(algebra_id):
    pres = get_algebra(algebra_id)
    key, par = pres.table.order_key, pres.table.word_parity
    for lhs, rule in pres.rules.items():
        for w, _ in rule.rhs:
            assert par(w) == par(lhs)
            assert key(w) < key(lhs)


def test_elements_of_different_algebras_do_not_mix():
    with pytest.raises(ValueError):
        superspace().gen("x") + forms().gen("x")


def test_over_renormalizes():
    free = superspace().free()
    w = free.word("x", "theta1")
    assert w.over(superspace()) == superspace().word("x", "theta1")


ALGEBRAS = [superspace, forms, wedge, calculus, group]


@settings(max_examples=40)
@given(st.sampled_from(ALGEBRAS).flatmap(lambda f: st.tuples(*(elements_of(f(), max_len=3) for _ in range(3)))))
def test_associativity(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40)
@given(st.sampled_from(ALGEBRAS).flatmap(lambda f: elements_of(f())))
def test_normalize_idempotent(e):
    assert e.algebra.normalize(e) == e
    assert all(e.algebra.is_irreducible(w) for w in e.words())


@settings(max_examples=30)
@given(st.sampled_from(ALGEBRAS).flatmap(lambda f: st.tuples(elements_of(f()), elements_of(f()))))
def test_distributivity(pair):
    a, b = pair
    assert a * (a + b) == a * a + a * b


def test_combined_koszul_sign():
    comb = combined()
    alpha, theta1, x = comb.gens("alpha", "theta1", "x")
    assert theta1 * alpha == -(alpha * theta1)
    assert x * alpha == alpha * x


def test_substitute_and_scalars():
    ss = superspace()
    e = h * ss.word("x", "theta2") + 1
    assert e.substitute(h=0) == 1
    assert e.scalar_part() == 1 and not e.is_scalar()
    assert ss.gen("x") ** 0 == 1
    with pytest.raises(ValueError):
        ss.gen("x") ** -1
