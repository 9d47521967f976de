from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from gt_engine import TensorSeries, genus0_context

settings.register_profile(
    "engine",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("engine")


@pytest.fixture
def ctx():
    return genus0_context(2, 5)


def words(n=2, max_len=4):
    return st.lists(st.integers(1, n), max_size=max_len).map(tuple)


def coeffs():
    return st.fractions(
        min_value=Fraction(-6), max_value=Fraction(6), max_denominator=8
    )


def series(context, max_terms=4, min_len=0, max_len=None):
    hi = context.degree if max_len is None else max_len
    word_st = st.lists(
        st.integers(1, context.letter_count), min_size=min_len, max_size=hi
    ).map(tuple)
    return st.dictionaries(word_st, coeffs(), max_size=max_terms).map(
        lambda d: TensorSeries(context, d)
    )
