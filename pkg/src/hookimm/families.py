"""Graph families and random inputs for the verification suites."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator

from .graphs import Digraph, Graph, is_bipartite


def all_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled simple graphs on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def all_digraphs(n: int) -> Iterator[Digraph]:
    """All 2^(n(n-1)) labelled loopless digraphs on ``n`` vertices."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for bits in range(1 << len(pairs)):
        yield Digraph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def bipartite_graphs(n: int) -> Iterator[Graph]:
    return (g for g in all_graphs(n) if is_bipartite(g))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_digraph(n: int, rng: random.Random, p: float = 0.5) -> Digraph:
    return Digraph(n, frozenset(
        (a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        return path_graph(n)
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def star_graph(n: int) -> Graph:
    return Graph(n, frozenset((0, i) for i in range(1, n)))


# ---------------------------------------------------------------------------
# unlabelled trees


def _centers(n: int, adj: list) -> list:
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for w in adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        leaves = nxt
    return leaves


def _rooted_code(adj: list, root: int, parent: int) -> str:
    kids = sorted(_rooted_code(adj, w, root) for w in adj[root] if w != parent)
    return "(" + "".join(kids) + ")"


def tree_canonical_form(t: Graph) -> str:
    """AHU encoding rooted at a centre (the smaller code if bicentral)."""
    adj = [t.neighbors(v) for v in range(t.n)]
    return min(_rooted_code(adj, c, -1) for c in _centers(t.n, adj))


def nonisomorphic_trees(n: int) -> list:
    """One labelled representative per isomorphism class of trees on ``n`` vertices.

    Built by leaf addition from the trees on ``n - 1`` vertices.
    """
    if n <= 0:
        return []
    level = [Graph(1)]
    for size in range(2, n + 1):
        seen = {}
        for t in level:
            for v in range(t.n):
                bigger = Graph(size, t.edges | {(v, size - 1)})
                seen.setdefault(tree_canonical_form(bigger), bigger)
        level = list(seen.values())
    return level


# ---------------------------------------------------------------------------
# random rationals


def random_rational(rng: random.Random, num: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_matrix(n: int, rng: random.Random, num: int = 6, den: int = 4) -> list:
    return [[random_rational(rng, num, den) for _ in range(n)] for _ in range(n)]
