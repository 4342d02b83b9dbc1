"""Hypothesis strategies for exact polynomials."""
from fractions import Fraction

from hypothesis import strategies as st

from cherednik.poly import MultiPoly

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-4, max_value=4)


def polys(names=("a", "b", "c"), max_terms=4, max_exp=3):
    mono = st.lists(
        st.tuples(st.sampled_from(names), st.integers(min_value=1, max_value=max_exp)),
        max_size=len(names),
        unique_by=lambda t: t[0],
    ).map(lambda items: tuple(sorted(items)))
    return st.dictionaries(mono, rationals.filter(bool), max_size=max_terms).map(MultiPoly)


def points(names=("a", "b", "c")):
    return st.fixed_dictionaries({n: rationals for n in names})
