"""Hypothesis strategies shared by the unit tests."""

from fractions import Fraction

from hypothesis import strategies as st

from ncsuper.coefficients import Poly

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(*(st.integers(0, 2) for _ in range(4)))
polys = st.dictionaries(exponents, rationals, max_size=4).map(Poly)
small_polys = st.dictionaries(st.tuples(st.integers(0, 1), st.just(0), st.just(0), st.just(0)), rationals, max_size=2).map(Poly)


def words_over(letters, max_size=4):
    return st.lists(st.sampled_from(letters), max_size=max_size).map(tuple)


def elements_of(algebra, letters=None, max_terms=3, max_len=4):
    letters = letters or algebra.table.names
    terms = st.dictionaries(words_over(letters, max_len), small_polys, max_size=max_terms)
    return terms.map(algebra.element)


def nonzero_fraction():
    return rationals.filter(lambda q: q != Fraction(0))
