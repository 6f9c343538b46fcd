"""Shared hypothesis strategies and small fixtures for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from maninkit.exactlin import Matrix, Subspace

small_q = st.builds(Fraction, st.integers(-3, 3), st.sampled_from([1, 1, 2, 3]))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    entries = [[draw(small_q) for _ in range(c)] for _ in range(r)]
    return Matrix.from_rows(entries, c)


@st.composite
def subspaces(draw, n):
    k = draw(st.integers(0, n))
    vecs = [[draw(small_q) for _ in range(n)] for _ in range(k)]
    return Subspace.span(vecs, n)


@st.composite
def seeds(draw):
    return draw(st.integers(0, 10**6))
