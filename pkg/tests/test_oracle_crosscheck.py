"""Engine results against the naive reference reducer in ``oracle``."""

from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from ncsuper.matrices import PAIR_PARITY, build_constant, rtt_residuals
from ncsuper.presentations import calculus, group, superspace, wedge

LETTERS = ("theta1", "x", "theta2")
words = st.lists(st.sampled_from(LETTERS), min_size=0, max_size=6).map(tuple)


@pytest.fixture(scope="module")
def ss_oracle():
    return oracle.NaiveRewriter(oracle.SUPERSPACE_RULES)


def test_hand_rules_match_engine_rules():
    engine = oracle.rules_from_presentation(superspace())
    assert set(engine) == set(oracle.SUPERSPACE_RULES)
    for lhs, rhs in oracle.SUPERSPACE_RULES.items():
        assert {w: sympy.expand(c - engine[lhs].get(w, 0)) for w, c in rhs.items()} == {w: 0 for w in rhs}
        assert set(engine[lhs]) <= set(rhs)


def test_superspace_overlaps_resolve_by_brute_force(ss_oracle):
    overlaps = ss_oracle.overlaps()
    assert overlaps
    for word, left, right in overlaps:
        assert left == right, word


def test_corrupted_theta2_square_breaks_confluence():
    rules = dict(oracle.SUPERSPACE_RULES)
    rules[("theta2", "theta2")] = {(): 1}
    broken = oracle.NaiveRewriter(rules)
    assert any(left != right for _, left, right in broken.overlaps())


@settings(max_examples=150, deadline=None)
@given(words)
def test_superspace_normal_forms_agree(word):
    ss = superspace()
    engine = oracle.element_to_terms(ss.element({word: 1}))
    assert engine == oracle.NaiveRewriter(oracle.SUPERSPACE_RULES).reduce({word: 1})


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_superspace_products_agree(u, v):
    ss = superspace()
    rw = oracle.NaiveRewriter(oracle.SUPERSPACE_RULES)
    got = oracle.element_to_terms(ss.element({u: 1}) * ss.element({v: 1}))
    assert got == rw.multiply(rw.reduce({u: 1}), rw.reduce({v: 1}))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(("xi1", "eta", "xi2", "theta1", "x", "theta2", "d1", "dx", "d2")), max_size=5).map(tuple))
def test_calculus_normal_forms_agree(word):
    calc = calculus()
    rw = oracle.NaiveRewriter(oracle.rules_from_presentation(calc))
    assert oracle.element_to_terms(calc.element({word: 1})) == rw.reduce({word: 1})


def test_rtt_components_vanish_in_reference_reducer():
    rw = oracle.NaiveRewriter(oracle.rules_from_presentation(group()))
    T = oracle.group_entries(rw)
    R = build_constant("R")
    p = PAIR_PARITY
    for k, l, i, j in product(range(3), repeat=4):
        total = {}
        for x, y in product(range(3), repeat=2):
            r1 = oracle.poly_to_sympy(R.scalar(k, l, x, y))
            if r1 != 0:
                sign = (-1) ** (p[y] * (p[x] + p[i]))
                total = oracle.add(total, oracle.scale(sign * r1, rw.multiply(T[x][i], T[y][j])))
            r2 = oracle.poly_to_sympy(R.scalar(x, y, i, j))
            if r2 != 0:
                sign = (-1) ** (p[y] * (p[k] + p[x]))
                total = oracle.add(total, oracle.scale(-sign * r2, rw.multiply(T[l][y], T[k][x])))
        assert total == {}, (k, l, i, j)


def test_engine_rtt_agrees():
    assert all(not v for v in rtt_residuals().values())


def test_d_respects_superspace_relations_in_reference_reducer():
    rw = oracle.NaiveRewriter(oracle.rules_from_presentation(wedge()))
    relations = []
    for lhs, rhs in oracle.SUPERSPACE_RULES.items():
        rel = {lhs: sympy.Integer(1)}
        for w, c in rhs.items():
            rel[w] = rel.get(w, 0) - c
        relations.append(rel)
    for rel in relations:
        total = {}
        for w, c in rel.items():
            total = oracle.add(total, oracle.scale(c, oracle.exterior_d(w, oracle.SUPERSPACE_PARITY)))
        assert rw.reduce(total) == {}, rel
