"""Star-shaped plumbing graphs and their intersection forms.

Vertex order is frozen: the central node is vertex 0, followed by arm 1
(inner to outer), arm 2, and so on.  Matrices, JSON and DOT output all use
this order, so repeated runs are byte-identical.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Literal

from .errors import InternalConsistencyError
from .exact import bareiss_det, bareiss_minors, hj_expand
from .seifert import SeifertData

ChiConvention = Literal["paper", "genus"]
CONVENTIONS: tuple[str, ...] = ("paper", "genus")


@dataclass(frozen=True)
class Vertex:
    id: int
    weight: int
    genus: int = 0
    role: str = "node"  # node | arm | leaf
    arm: int | None = None  # 1-based arm index
    position: int | None = None  # 1-based, inner to outer

    @property
    def name(self) -> str:
        if self.arm is None:
            return f"v{self.id}"
        return f"a{self.arm}_{self.position}"


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n == 0:
            raise ValueError("a plumbing graph needs at least one vertex")
        for i, v in enumerate(self.vertices):
            if v.id != i:
                raise ValueError("vertex ids must equal their position")
        if len(self.edges) != n - 1:
            raise ValueError("edge set is not a tree (wrong edge count)")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if len(self._component(0)) != n:
            raise ValueError("edge set is not a tree (disconnected)")

    @classmethod
    def from_weights(
        cls,
        weights: list[int],
        edges: list[tuple[int, int]],
        genera: list[int] | None = None,
    ) -> "PlumbingGraph":
        """Build a generic tree; useful for tests and small examples."""
        genera = genera or [0] * len(weights)
        verts = tuple(Vertex(i, w, g) for i, (w, g) in enumerate(zip(weights, genera)))
        return cls(verts, tuple(sorted((min(e), max(e)) for e in edges)))

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def valence(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.vertices)

    def _component(self, start: int, removed: frozenset[int] = frozenset()) -> list[int]:
        adj = self.adjacency
        out, todo, seen = [], deque([start]), {start}
        while todo:
            x = todo.popleft()
            out.append(x)
            for y in adj[x]:
                if y not in seen and y not in removed:
                    seen.add(y)
                    todo.append(y)
        return out

    def cut_off(self, v: int, u: int) -> list[int]:
        """Vertices of the component containing ``u`` once edge ``{v, u}`` is cut."""
        return sorted(self._component(u, frozenset({v})))

    def arm(self, i: int) -> list[Vertex]:
        return [v for v in self.vertices if v.arm == i]

    @property
    def arm_count(self) -> int:
        return max((v.arm or 0) for v in self.vertices)


def build_star_graph(sd: SeifertData) -> PlumbingGraph:
    s = len(sd.pairs)
    node = sd.e0 + sum(Fraction(beta, alpha) for alpha, beta in sd.pairs) - s
    if node.denominator != 1:
        raise InternalConsistencyError(f"central Euler weight {node} is not an integer")
    vertices = [Vertex(0, int(node), sd.genus, "node")]
    edges = []
    for i, (alpha, beta) in enumerate(sd.pairs, start=1):
        entries = hj_expand(alpha, alpha - beta).entries
        prev = 0
        for j, e in enumerate(entries, start=1):
            vid = len(vertices)
            role = "leaf" if j == len(entries) else "arm"
            vertices.append(Vertex(vid, -e, 0, role, i, j))
            edges.append((prev, vid))
            prev = vid
    return PlumbingGraph(tuple(vertices), tuple(edges))


def intersection_matrix(g: PlumbingGraph) -> tuple[tuple[int, ...], ...]:
    n = len(g)
    rows = [[0] * n for _ in range(n)]
    for v in g.vertices:
        rows[v.id][v.id] = v.weight
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = 1
    return tuple(tuple(r) for r in rows)


def postorder(g: PlumbingGraph, root: int = 0) -> tuple[list[int], list[int | None]]:
    adj = g.adjacency
    parent: list[int | None] = [None] * len(g)
    order, stack, seen = [], [root], {root}
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                stack.append(y)
    order.reverse()
    return order, parent


def graph_determinant(g: PlumbingGraph) -> int:
    """``det(-A)`` by peeling leaves toward vertex 0.

    Eliminating a leaf ``c`` from ``-A`` subtracts ``1/pivot(c)`` from its
    parent's diagonal; the determinant is the product of the pivots.
    """
    order, parent = postorder(g)
    pivot = [Fraction(-v.weight) for v in g.vertices]
    det = Fraction(1)
    for x in order:
        if pivot[x] == 0:
            # singular leading block; only reachable for non-definite input
            return bareiss_det([[-x_ for x_ in row] for row in intersection_matrix(g)])
        det *= pivot[x]
        par = parent[x]
        if par is not None:
            pivot[par] -= 1 / pivot[x]
    if det.denominator != 1:
        raise InternalConsistencyError(f"tree determinant {det} is not an integer")
    return int(det)


def is_negative_definite(m) -> bool:
    neg = [[-x for x in row] for row in m]
    minors = bareiss_minors(neg)
    return len(minors) == len(neg) and all(x > 0 for x in minors)


def chi_resolution(g: PlumbingGraph, convention: ChiConvention = "paper") -> int:
    """Euler characteristic of the plumbed 4-manifold.

    The ``paper`` convention treats every curve as a sphere (``2 * #vertices -
    #edges``); ``genus`` uses ``sum(2 - 2 g_i) - #edges``.
    """
    if convention == "paper":
        return 2 * len(g) - len(g.edges)
    if convention == "genus":
        return sum(2 - 2 * v.genus for v in g.vertices) - len(g.edges)
    raise ValueError(f"unknown chi convention {convention!r}")


def vertex_label(v: Vertex) -> str:
    return f"{v.weight} [{v.genus}]" if v.genus > 0 else str(v.weight)


def to_dot(g: PlumbingGraph, name: str = "plumbing") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f'  {v.name} [label="{vertex_label(v)}"];')
    for u, v in g.edges:
        lines.append(f"  {g.vertices[u].name} -- {g.vertices[v].name};")
    lines.append("}")
    return "\n".join(lines) + "\n"
