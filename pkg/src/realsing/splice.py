"""Maximal splice diagrams of tree plumbing graphs.

The weight at the ``v``-end of an edge ``{v, u}`` is ``det(-A)`` of the
component containing ``u`` after the edge is cut.  All such weights come
from one integer recursion over directed edges: for the subtree hanging at
``u`` (seen from ``v``) with child subtrees ``T_c``,

    D(v->u) = -w_u * prod D(u->c) - sum_c P(u->c) * prod_{c' != c} D(u->c')

where ``P(u->c) = prod D(c->x)`` over the children ``x`` of ``c``, i.e. the
determinant of ``T_c`` with ``c`` removed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .plumbing import PlumbingGraph, graph_determinant


@dataclass(frozen=True, eq=False)
class SpliceDiagram:
    graph: PlumbingGraph
    weights: dict[tuple[int, int], int]  # (vertex, neighbour) -> weight at vertex end
    determinant: int
    _rows: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)

    def weight(self, v: int, u: int) -> int:
        return self.weights[(v, u)]

    def weights_at(self, v: int) -> tuple[int, ...]:
        return tuple(self.weights[(v, u)] for u in self.graph.adjacency[v])

    def edge_weights(self) -> list[tuple[int, int, int, int]]:
        """``(u, v, w_u, w_v)`` for every edge, in frozen edge order."""
        return [(u, v, self.weights[(u, v)], self.weights[(v, u)]) for u, v in self.graph.edges]

    def path_products(self, i: int) -> tuple[int, ...]:
        """Row ``i`` of ``det(-A) * (-A)^-1`` as integer path products (cached)."""
        row = self._rows.get(i)
        if row is None:
            row = _path_product_row(self, i)
            self._rows[i] = row
        return row


def _directed_determinants(g: PlumbingGraph) -> dict[tuple[int, int], int]:
    adj = g.adjacency
    w = g.weights
    D: dict[tuple[int, int], int] = {}
    # Two passes from vertex 0: subtrees below each vertex, then the ones above.
    order: list[int] = []
    parent: list[int | None] = [None] * len(g)
    stack, seen = [0], {0}
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                stack.append(y)

    def subtree(v: int, u: int) -> int:
        # every D(u->c) with c != v must already be known
        kids = [c for c in adj[u] if c != v]
        dets = [D[(u, c)] for c in kids]
        total = -w[u] * math.prod(dets)
        for k, c in enumerate(kids):
            minus_c = math.prod(D[(c, x)] for x in adj[c] if x != u)
            total -= minus_c * math.prod(dets[:k] + dets[k + 1:])
        return total

    for u in reversed(order):
        if parent[u] is not None:
            D[(parent[u], u)] = subtree(parent[u], u)
    for v in order:
        if parent[v] is not None:
            # subtree above v, hanging at its parent
            D[(v, parent[v])] = subtree(v, parent[v])
    return D


def splice_weights(g: PlumbingGraph) -> SpliceDiagram:
    D = _directed_determinants(g)
    return SpliceDiagram(graph=g, weights=D, determinant=graph_determinant(g))


def edge_determinants(d: SpliceDiagram) -> dict[tuple[int, int], int]:
    """Product of the two weights on each edge minus the product of the adjacent ones.

    A leaf end has no adjacent weights; its (empty) product is 1.
    """
    adj = d.graph.adjacency
    out = {}
    for u, v in d.graph.edges:
        side_u = math.prod(d.weights[(u, x)] for x in adj[u] if x != v)
        side_v = math.prod(d.weights[(v, x)] for x in adj[v] if x != u)
        out[(u, v)] = d.weights[(u, v)] * d.weights[(v, u)] - side_u * side_v
    return out


def _path_product_row(d: SpliceDiagram, i: int) -> tuple[int, ...]:
    adj = d.graph.adjacency
    W = d.weights
    row = [0] * len(d.graph)
    row[i] = math.prod(W[(i, x)] for x in adj[i])
    # acc: product of off-path weights collected strictly before the vertex
    stack = [(c, i, math.prod(W[(i, x)] for x in adj[i] if x != c)) for c in adj[i]]
    while stack:
        v, par, acc = stack.pop()
        off = [x for x in adj[v] if x != par]
        row[v] = acc * math.prod(W[(v, x)] for x in off)
        for c in off:
            stack.append((c, v, acc * math.prod(W[(v, x)] for x in off if x != c)))
    return tuple(row)


def inverse_entry(d: SpliceDiagram, i: int, j: int) -> Fraction:
    """Entry ``(i, j)`` of ``(-A)^-1`` from splice weights alone.

    Off the diagonal it is the product of the weights adjacent to, but not on,
    the path from ``i`` to ``j``, divided by ``det(-A)``; on the diagonal it is
    the product of every weight at ``i``.
    """
    return Fraction(d.path_products(i)[j], d.determinant)


def inverse_matrix(d: SpliceDiagram) -> list[list[Fraction]]:
    n = len(d.graph)
    return [[Fraction(x, d.determinant) for x in d.path_products(i)] for i in range(n)]


def to_dot(d: SpliceDiagram, name: str = "splice") -> str:
    g = d.graph
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v in g.vertices:
        lines.append(f'  {v.name} [xlabel="{v.name}"];')
    for u, v, wu, wv in d.edge_weights():
        lines.append(
            f'  {g.vertices[u].name} -- {g.vertices[v].name} '
            f'[taillabel="{wu}", headlabel="{wv}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
