import pytest
from hypothesis import strategies as st

from rsfock.laurent import Laurent2
from rsfock.partitions import Partition


@st.composite
def laurent2(draw, max_terms=5, exp=4, coeff=50):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(-exp, exp), st.integers(-exp, exp)),
        st.integers(-coeff, coeff),
        max_size=max_terms,
    ))
    return Laurent2(terms)


@st.composite
def partitions(draw, max_size=30):
    n = draw(st.integers(0, max_size))
    parts = []
    remaining = n
    while remaining:
        p = draw(st.integers(1, min(remaining, parts[-1] if parts else remaining)))
        parts.append(p)
        remaining -= p
    return Partition(parts)


@pytest.fixture
def strategies():
    return {"laurent2": laurent2, "partitions": partitions}
