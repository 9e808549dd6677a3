"""Graphs, digraphs, the matrices beta*D + gamma*A, and cycle enumeration.

Vertices are ``0 .. n-1`` internally and ``1 .. n`` in every text format.
Undirected edges are stored as ``(u, v)`` with ``u < v``; arcs as ``(tail, head)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .algebra import format_rational, to_rational
from .errors import GraphFormatError, SizeLimitError

GRAPH6_LIMIT = 10


def _norm_edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = list(edges)
        if len({_norm_edge(u, v) for u, v in edges}) != len(edges):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    directed = False

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> list:
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, relabelled in order."""
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ))


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", frozenset((u, v) for u, v in self.arcs))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        arcs = [tuple(a) for a in arcs]
        if len(set(arcs)) != len(arcs):
            raise ValueError("duplicate arc")
        return cls(n, frozenset(arcs))

    directed = True

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> list:
        return sorted(h for t, h in self.arcs if t == v)

    def in_neighbors(self, v: int) -> list:
        return sorted(t for t, h in self.arcs if h == v)

    def outdeg(self, v: int) -> int:
        return sum(1 for t, _ in self.arcs if t == v)

    degree = outdeg

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def has_digon(self) -> bool:
        return any((h, t) in self.arcs for t, h in self.arcs)


AnyGraph = Union[Graph, Digraph]


@dataclass(frozen=True)
class MatrixParams:
    """The pair (beta, gamma) of H = beta*D + gamma*A."""

    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", to_rational(self.beta))
        object.__setattr__(self, "gamma", to_rational(self.gamma))

    @classmethod
    def laplacian(cls) -> "MatrixParams":
        return cls(Fraction(1), Fraction(-1))

    @classmethod
    def signless(cls) -> "MatrixParams":
        return cls(Fraction(1), Fraction(1))

    @classmethod
    def adjacency(cls) -> "MatrixParams":
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def a_alpha(cls, alpha) -> "MatrixParams":
        alpha = to_rational(alpha)
        if not 0 <= alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {format_rational(alpha)}")
        return cls(alpha, 1 - alpha)

    @classmethod
    def preset(cls, name: str, alpha=None) -> "MatrixParams":
        name = name.lower().replace("-", "_")
        if name in ("laplacian", "l"):
            return cls.laplacian()
        if name in ("signless", "signless_laplacian", "q"):
            return cls.signless()
        if name in ("adjacency", "a"):
            return cls.adjacency()
        if name in ("a_alpha", "aalpha"):
            if alpha is None:
                raise ValueError("the a_alpha preset needs alpha")
            return cls.a_alpha(alpha)
        raise ValueError(f"unknown matrix preset {name!r}")

    def __str__(self) -> str:
        return f"(beta={format_rational(self.beta)}, gamma={format_rational(self.gamma)})"


@dataclass(frozen=True)
class CycleRecord:
    """A simple cycle; ``walk`` lists its vertices in traversal order."""

    vertices: frozenset
    length: int
    walk: tuple = ()

    @classmethod
    def from_walk(cls, walk: Sequence[int]) -> "CycleRecord":
        walk = tuple(walk)
        return cls(frozenset(walk), len(walk), walk)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class RationalMatrix:
    """Dense square matrix whose rows/columns carry original vertex labels."""

    entries: tuple
    labels: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(rows) != len(self.labels) or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square with one label per row")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        return cls(tuple(tuple(to_rational(x) if isinstance(x, str) else x for x in r)
                         for r in rows), tuple(range(len(rows))))

    @property
    def order(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def to_json(self) -> list:
        return [[format_rational(x) for x in r] for r in self.entries]


def build_H(g: AnyGraph, p: MatrixParams) -> RationalMatrix:
    """beta*D + gamma*A, with out-degrees on the diagonal for digraphs."""
    n = g.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    if isinstance(g, Digraph):
        for t, h in g.arcs:
            rows[t][h] = p.gamma
            rows[t][t] += p.beta
    else:
        for u, v in g.edges:
            rows[u][v] = rows[v][u] = p.gamma
            rows[u][u] += p.beta
            rows[v][v] += p.beta
    return RationalMatrix(tuple(tuple(r) for r in rows), tuple(range(n)))


def principal_submatrix(m: RationalMatrix, removed: Iterable[int]) -> RationalMatrix:
    """Delete the rows and columns labelled by ``removed``.

    Remaining entries, including the diagonal, are copied unchanged.
    """
    removed = set(removed)
    unknown = removed - set(m.labels)
    if unknown:
        raise KeyError(f"vertices {sorted(unknown)} are not labels of this matrix")
    keep = [i for i, lab in enumerate(m.labels) if lab not in removed]
    return RationalMatrix(
        tuple(tuple(m.entries[i][j] for j in keep) for i in keep),
        tuple(m.labels[i] for i in keep),
    )


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    e = _norm_edge(*e)
    if e not in g.edges:
        raise KeyError(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def delete_arc(d: Digraph, a: Sequence[int]) -> Digraph:
    a = tuple(a)
    if a not in d.arcs:
        raise KeyError(f"arc {a} not in digraph")
    return Digraph(d.n, d.arcs - {a})


# ---------------------------------------------------------------------------
# cycle enumeration


def _adjacency(g: AnyGraph) -> list:
    adj = [[] for _ in range(g.n)]
    if isinstance(g, Digraph):
        for t, h in g.arcs:
            adj[t].append(h)
    else:
        for u, v in g.edges:
            adj[u].append(v)
            adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def _simple_paths(adj: list, start: int, goal: int) -> Iterator[list]:
    """All simple paths start -> ... -> goal (goal only as the last vertex)."""
    path = [start]
    on_path = {start}

    def rec(u: int) -> Iterator[list]:
        for w in adj[u]:
            if w == goal:
                yield path + [goal]
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from rec(w)
                path.pop()
                on_path.discard(w)

    if start == goal:
        return iter(())
    return rec(start)


def cycles_through_vertex(g: Graph, v: int) -> list:
    """Every undirected simple cycle (length >= 3) through ``v``, once each.

    A DFS closes paths ``v, a, ..., b`` back to ``v``; each cycle is met in
    both orientations and kept only when ``a < b``.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    adj = _adjacency(g)
    out = []
    path = [v]
    on_path = {v}

    def rec(u: int) -> None:
        for w in adj[u]:
            if w == v:
                if len(path) >= 3 and path[1] < path[-1]:
                    out.append(CycleRecord.from_walk(path))
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                rec(w)
                path.pop()
                on_path.discard(w)

    rec(v)
    return out


def cycles_through_edge(g: Graph, e: Sequence[int]) -> list:
    """Every simple cycle of length >= 3 using edge ``e``, once each."""
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise KeyError(f"edge {(u, v)} not in graph")
    adj = _adjacency(g)
    return [CycleRecord.from_walk(p) for p in _simple_paths(adj, u, v) if len(p) >= 3]


def dicycles_through_vertex(d: Digraph, v: int) -> list:
    """Every consistently directed simple cycle through ``v``, digons included."""
    if not 0 <= v < d.n:
        raise IndexError(f"vertex {v} out of range")
    adj = _adjacency(d)
    out = []
    for w in adj[v]:
        for p in _simple_paths(adj, w, v):
            out.append(CycleRecord.from_walk([v] + p[:-1]))
    return out


def dicycles_through_arc(d: Digraph, a: Sequence[int]) -> list:
    """Every consistently directed simple cycle using arc ``a = (tail, head)``."""
    t, h = a
    if (t, h) not in d.arcs:
        raise KeyError(f"arc {(t, h)} not in digraph")
    adj = _adjacency(d)
    return [CycleRecord.from_walk([t] + p[:-1]) for p in _simple_paths(adj, h, t)]


def all_cycles(g: AnyGraph) -> list:
    """Census of all simple cycles, each once (anchored at its smallest vertex)."""
    out = []
    for v in range(g.n):
        cyc = (dicycles_through_vertex(g, v) if isinstance(g, Digraph)
               else cycles_through_vertex(g, v))
        out.extend(c for c in cyc if min(c.vertices) == v)
    return out


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    adj = _adjacency(g)
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# ---------------------------------------------------------------------------
# text formats


def parse_graph(text: str, directed: Optional[bool] = None) -> AnyGraph:
    """Parse the edge-list format.

    The first non-comment line is ``n m`` or ``n m directed``, followed by
    ``m`` lines ``u v`` with 1-based vertices.  ``#`` starts a comment.
    Passing ``directed=True`` reads the arcs as directed regardless of the
    header keyword.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty input: missing 'n m' header")
    head = lines[0].split()
    if len(head) not in (2, 3) or (len(head) == 3 and head[2].lower() != "directed"):
        raise GraphFormatError(f"malformed header {lines[0]!r}; expected 'n m [directed]'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    is_directed = len(head) == 3 if directed is None else (directed or len(head) == 3)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(body)} follow")
    pairs = []
    seen = set()
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range in {line!r} (n={n})")
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        key = (u - 1, v - 1) if is_directed else _norm_edge(u - 1, v - 1)
        if key in seen:
            raise GraphFormatError(f"duplicate {'arc' if is_directed else 'edge'} {u} {v}")
        seen.add(key)
        pairs.append(key)
    if is_directed:
        return Digraph(n, frozenset(pairs))
    return Graph(n, frozenset(pairs))


def format_edge_list(g: AnyGraph) -> str:
    if isinstance(g, Digraph):
        lines = [f"{g.n} {len(g.arcs)} directed"]
        lines += [f"{t + 1} {h + 1}" for t, h in g.sorted_arcs()]
    else:
        lines = [f"{g.n} {len(g.edges)}"]
        lines += [f"{u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(s: str, limit: int = GRAPH6_LIMIT) -> Graph:
    """Decode a graph6 string (single-byte order field, n <= 62)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise GraphFormatError("graph6 characters must lie in '?'..'~'")
    n = codes[0]
    if n == 63:
        raise GraphFormatError("graph6 orders above 62 are not supported")
    if n > limit:
        raise SizeLimitError(f"graph6 order {n} exceeds the limit {limit}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - 1 != need:
        raise GraphFormatError(f"graph6 body has {len(codes) - 1} bytes, expected {need}")
    bits = []
    for c in codes[1:]:
        bits.extend((c >> (5 - i)) & 1 for i in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero graph6 padding bits")
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only orders up to 62 are encoded")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def describe(g: AnyGraph) -> str:
    """Short printable encoding, used in verification reports."""
    if isinstance(g, Digraph):
        arcs = " ".join(f"{t + 1}>{h + 1}" for t, h in g.sorted_arcs())
        return f"digraph n={g.n} [{arcs}]"
    return f"graph6={to_graph6(g)} n={g.n}"
