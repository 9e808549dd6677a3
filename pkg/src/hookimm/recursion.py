"""Vertex, edge and arc deletion recursions for hook immanantal polynomials.

Everything reduces to one recursion on principal submatrices H_S of
H = beta*D + gamma*A.  For a pivot ``v`` outside ``S``::

    Phi_k(H_S) = (x - beta d(v)) [Phi_{k-1}(H_{S+v}) + Phi_k(H_{S+v})]
               + gamma^2 sum_{u ~ v, u not in S} [Phi_{k-2}(H_{S+u+v}) - Phi_k(H_{S+u+v})]
               + 2 sum_{C through v, C disjoint from S}
                     gamma^|C| [(-1)^|C| Phi_{k-|C|}(H_{S+C}) - Phi_k(H_{S+C})]

where ``d(v)`` is always the degree in the full graph.  For digraphs ``d``
is the out-degree, the neighbour sum disappears and the cycle sum runs over
consistently directed cycles (digons included) without the factor 2.

``Phi_k`` of a principal submatrix of order ``m`` vanishes for ``k`` outside
``1..m``.  The empty matrix takes the value of
:func:`hookimm.symgroup.empty_hook_value`, which keeps the recursion exact
when a cycle swallows every remaining vertex.

Vertex sets are bitmasks internally; public functions take iterables of
0-based vertex indices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import ZERO, Poly
from .graphs import (
    AnyGraph,
    Digraph,
    Graph,
    MatrixParams,
    build_H,
    cycles_through_edge,
    cycles_through_vertex,
    delete_arc,
    delete_edge,
    dicycles_through_arc,
    dicycles_through_vertex,
    principal_submatrix,
)
from .symgroup import empty_hook_value

MAX_RECURSION_ORDER = 16


def _sign(l: int) -> int:
    return -1 if l % 2 else 1


def _mask(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


class EvalContext:
    """Memo tables for one (graph, params) pair.

    A context is single-writer.  ``pool`` optionally shares contexts of
    edge-deleted graphs between several evaluations on the same thread.
    """

    def __init__(self, graph: AnyGraph, params: MatrixParams, *,
                 use_memo: bool = True, pool: Optional[dict] = None):
        self.graph = graph
        self.params = params
        self.directed = isinstance(graph, Digraph)
        self.n = graph.n
        self.full = (1 << self.n) - 1
        self.use_memo = use_memo
        self.pool = pool
        self.memo: dict = {}
        self.dmemo: dict = {}
        beta, gamma = params.beta, params.gamma
        self.beta = beta
        self.gamma = gamma
        self.gamma2 = gamma * gamma
        self.diag = [beta * graph.degree(v) for v in range(self.n)]
        if self.directed:
            self.neighbors = [[] for _ in range(self.n)]
        else:
            self.neighbors = [graph.neighbors(v) for v in range(self.n)]
        self._cycles: dict = {}
        self._derived: dict = {}

    def cycle_terms(self, v: int) -> list:
        """``(mask, length, weight)`` for every cycle through ``v``."""
        terms = self._cycles.get(v)
        if terms is None:
            if self.directed:
                recs = dicycles_through_vertex(self.graph, v)
                factor = 1
            else:
                recs = cycles_through_vertex(self.graph, v)
                factor = 2
            terms = [(c.mask, c.length, factor * self.gamma ** c.length) for c in recs]
            self._cycles[v] = terms
        return terms

    def derived(self, graph: AnyGraph) -> "EvalContext":
        """Context for a modified graph under the same parameters."""
        if self.pool is not None:
            key = (graph, self.params)
            ctx = self.pool.get(key)
            if ctx is None:
                ctx = EvalContext(graph, self.params, use_memo=self.use_memo, pool=self.pool)
                self.pool[key] = ctx
            return ctx
        ctx = self._derived.get(graph)
        if ctx is None:
            ctx = EvalContext(graph, self.params, use_memo=self.use_memo)
            self._derived[graph] = ctx
        return ctx

    def pivot(self, removed: int) -> int:
        free = ~removed & self.full
        return (free & -free).bit_length() - 1

    # ------------------------------------------------------------------
    def phi(self, removed: int, k: int) -> Poly:
        if removed == self.full:
            return Poly.constant(empty_hook_value(k))
        if k < 1 or k > self.n - bin(removed).count("1"):
            return ZERO
        key = (removed, k)
        if self.use_memo:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        value = self.expand_phi(self.pivot(removed), removed, k)
        if self.use_memo:
            self.memo[key] = value
        return value

    def expand_phi(self, v: int, removed: int, k: int) -> Poly:
        phi = self.phi
        rv = removed | (1 << v)
        out = (phi(rv, k - 1) + phi(rv, k)).times_linear(self.diag[v])
        for u in self.neighbors[v]:
            if removed >> u & 1:
                continue
            ruv = rv | (1 << u)
            out = out + (phi(ruv, k - 2) - phi(ruv, k)).scale(self.gamma2)
        for cmask, l, w in self.cycle_terms(v):
            if cmask & removed:
                continue
            rc = removed | cmask
            out = out + (phi(rc, k - l).scale(_sign(l)) - phi(rc, k)).scale(w)
        return out

    def d(self, removed: int, k: int) -> Fraction:
        if removed == self.full:
            return Fraction(empty_hook_value(k))
        if k < 1 or k > self.n - bin(removed).count("1"):
            return Fraction(0)
        key = (removed, k)
        if self.use_memo:
            hit = self.dmemo.get(key)
            if hit is not None:
                return hit
        value = self.expand_d(self.pivot(removed), removed, k)
        if self.use_memo:
            self.dmemo[key] = value
        return value

    def expand_d(self, v: int, removed: int, k: int) -> Fraction:
        d = self.d
        rv = removed | (1 << v)
        out = self.diag[v] * (d(rv, k - 1) + d(rv, k))
        for u in self.neighbors[v]:
            if removed >> u & 1:
                continue
            ruv = rv | (1 << u)
            out += self.gamma2 * (d(ruv, k - 2) - d(ruv, k))
        for cmask, l, w in self.cycle_terms(v):
            if cmask & removed:
                continue
            rc = removed | cmask
            out += w * (d(rc, k - l) - _sign(l) * d(rc, k))
        return out


def _check_order(ctx: EvalContext) -> None:
    if ctx.n > MAX_RECURSION_ORDER:
        from .errors import SizeLimitError
        raise SizeLimitError(f"order {ctx.n} exceeds the recursion limit {MAX_RECURSION_ORDER}")


def phi_general(ctx: EvalContext, removed: Iterable[int], k: int) -> Poly:
    """Phi_k(H_removed, x), pivoting on the smallest surviving vertex."""
    _check_order(ctx)
    return ctx.phi(_mask(removed, ctx.n), k)


def dk_general(ctx: EvalContext, removed: Iterable[int], k: int) -> Fraction:
    """d_k(H_removed), by the same recursion carried out on rationals."""
    _check_order(ctx)
    return ctx.d(_mask(removed, ctx.n), k)


def phi_vertex(ctx: EvalContext, v: int, k: int) -> Poly:
    """Phi_k(H) expanded at the caller's pivot ``v``."""
    _check_order(ctx)
    if not 0 <= v < ctx.n:
        raise IndexError(f"vertex {v} out of range for n={ctx.n}")
    return ctx.expand_phi(v, 0, k)


def dk_vertex(ctx: EvalContext, v: int, k: int) -> Fraction:
    _check_order(ctx)
    if not 0 <= v < ctx.n:
        raise IndexError(f"vertex {v} out of range for n={ctx.n}")
    return ctx.expand_d(v, 0, k)


def _default_uv_coeffs(p: MatrixParams) -> tuple:
    b2, g2 = p.beta * p.beta, p.gamma * p.gamma
    return (b2 - g2, 2 * b2, b2 + g2)


def phi_edge(ctx: EvalContext, e: Sequence[int], k: int,
             uv_coeffs: Optional[Sequence] = None) -> Poly:
    """Phi_k(H) from Phi_k(H(G - e)) plus correction terms.

    For an undirected edge ``uv``::

        Phi_k(H(G-e)) - beta [Phi_k + Phi_{k-1}](H_v(G-e)) - beta [Phi_k + Phi_{k-1}](H_u(G-e))
          + c0 Phi_k(H_uv) + c1 Phi_{k-1}(H_uv) + c2 Phi_{k-2}(H_uv)
          + 2 sum_{C through e} gamma^|C| [(-1)^|C| Phi_{k-|C|}(H_C) - Phi_k(H_C)]

    with ``(c0, c1, c2) = (beta^2 - gamma^2, 2 beta^2, beta^2 + gamma^2)``
    unless ``uv_coeffs`` overrides them.  For an arc ``(v, u)`` only the tail
    term survives, there is no H_uv term, and the factor 2 is dropped.
    """
    _check_order(ctx)
    g = ctx.graph
    beta = ctx.beta
    if ctx.directed:
        t, h = e
        if uv_coeffs is not None:
            raise ValueError("uv_coeffs has no meaning for an arc")
        sub = ctx.derived(delete_arc(g, (t, h)))
        out = sub.phi(0, k) - (sub.phi(1 << t, k) + sub.phi(1 << t, k - 1)).scale(beta)
        cyc = dicycles_through_arc(g, (t, h))
        factor = 1
    else:
        u, v = e
        sub = ctx.derived(delete_edge(g, (u, v)))
        out = sub.phi(0, k)
        for w in (v, u):
            out = out - (sub.phi(1 << w, k) + sub.phi(1 << w, k - 1)).scale(beta)
        c0, c1, c2 = _default_uv_coeffs(ctx.params) if uv_coeffs is None else uv_coeffs
        ruv = (1 << u) | (1 << v)
        out = (out + ctx.phi(ruv, k).scale(c0) + ctx.phi(ruv, k - 1).scale(c1)
               + ctx.phi(ruv, k - 2).scale(c2))
        cyc = cycles_through_edge(g, (u, v))
        factor = 2
    for c in cyc:
        rc, l = c.mask, c.length
        w = factor * ctx.gamma ** l
        out = out + (ctx.phi(rc, k - l).scale(_sign(l)) - ctx.phi(rc, k)).scale(w)
    return out


def dk_edge(ctx: EvalContext, e: Sequence[int], k: int,
            uv_coeffs: Optional[Sequence] = None) -> Fraction:
    """d_k(H) from d_k(H(G - e)); the endpoint terms enter with +beta."""
    _check_order(ctx)
    g = ctx.graph
    beta = ctx.beta
    if ctx.directed:
        t, h = e
        if uv_coeffs is not None:
            raise ValueError("uv_coeffs has no meaning for an arc")
        sub = ctx.derived(delete_arc(g, (t, h)))
        out = sub.d(0, k) + beta * (sub.d(1 << t, k) + sub.d(1 << t, k - 1))
        cyc = dicycles_through_arc(g, (t, h))
        factor = 1
    else:
        u, v = e
        sub = ctx.derived(delete_edge(g, (u, v)))
        out = sub.d(0, k)
        for w in (v, u):
            out += beta * (sub.d(1 << w, k) + sub.d(1 << w, k - 1))
        c0, c1, c2 = _default_uv_coeffs(ctx.params) if uv_coeffs is None else uv_coeffs
        ruv = (1 << u) | (1 << v)
        out += c0 * ctx.d(ruv, k) + c1 * ctx.d(ruv, k - 1) + c2 * ctx.d(ruv, k - 2)
        cyc = cycles_through_edge(g, (u, v))
        factor = 2
    for c in cyc:
        rc, l = c.mask, c.length
        out += factor * ctx.gamma ** l * (ctx.d(rc, k - l) - _sign(l) * ctx.d(rc, k))
    return out


def phi_all(ctx: EvalContext) -> dict:
    """``{k: Phi_k(H)}`` for k = 1..n."""
    return {k: phi_general(ctx, (), k) for k in range(1, ctx.n + 1)}


def _check_adjacency_minors(g: AnyGraph, ctx: EvalContext) -> None:
    # with beta = 0 deleting rows/columns is the same as deleting vertices
    H = build_H(g, ctx.params)
    subsets = [{v} for v in range(g.n)]
    if isinstance(g, Graph):
        subsets += [set(e) for e in g.edges]
    if g.n:
        subsets += [set(r.vertices) for r in (
            dicycles_through_vertex(g, 0) if isinstance(g, Digraph)
            else cycles_through_vertex(g, 0))]
    for S in subsets:
        lhs = principal_submatrix(H, S).entries
        if isinstance(g, Digraph):
            keep = [v for v in range(g.n) if v not in S]
            idx = {v: i for i, v in enumerate(keep)}
            rest = Digraph(len(keep), frozenset(
                (idx[t], idx[h]) for t, h in g.arcs if t in idx and h in idx))
        else:
            rest = g.remove_vertices(S)
        rhs = build_H(rest, ctx.params).entries
        if lhs != rhs:
            raise AssertionError(f"H_S(G) != H(G - S) for S = {sorted(S)} under adjacency params")


def preset_poly(g: AnyGraph, preset: str, k: int, alpha=None) -> Poly:
    """Phi_k for a named matrix: laplacian, signless, adjacency or a_alpha."""
    params = MatrixParams.preset(preset, alpha)
    ctx = EvalContext(g, params)
    if preset.lower() in ("adjacency", "a"):
        _check_adjacency_minors(g, ctx)
    return phi_general(ctx, (), k)
