"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from hookimm.algebra import Poly
from hookimm.graphs import Digraph, Graph

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(Poly)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 5) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def matrices(draw, min_n: int = 1, max_n: int = 5) -> list:
    n = draw(st.integers(min_n, max_n))
    return [draw(st.lists(rationals, min_size=n, max_size=n)) for _ in range(n)]


params = st.tuples(rationals, rationals)
ZERO = Fraction(0)
