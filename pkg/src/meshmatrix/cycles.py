"""Integer 1-chains, tree paths and fundamental cycles relative to a spanning tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import HostMismatch, NotCotreeEdge, NotSpanningTree
from .graph import EdgeSubset, Multigraph, is_spanning_tree, spanning_tree


class OneChain:
    """Sparse integer combination of oriented edges of a host graph."""

    __slots__ = ("host", "_coeffs")

    def __init__(self, host: Multigraph, coeffs: Mapping[int, int] | None = None):
        self.host = host
        clean = {}
        for eid, c in (coeffs or {}).items():
            host.edge(eid)
            if c:
                clean[eid] = c
        self._coeffs = clean

    @classmethod
    def unit(cls, host: Multigraph, edge_id: int, coeff: int = 1) -> "OneChain":
        return cls(host, {edge_id: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def __getitem__(self, edge_id: int) -> int:
        return self._coeffs.get(edge_id, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _check(self, other: "OneChain"):
        if other.host is not self.host and other.host != self.host:
            raise HostMismatch("chains live on different graphs")

    def __add__(self, other: "OneChain") -> "OneChain":
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return OneChain(self.host, out)

    def __neg__(self) -> "OneChain":
        return OneChain(self.host, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "OneChain") -> "OneChain":
        return self + (-other)

    def __mul__(self, c: int) -> "OneChain":
        return OneChain(self.host, {k: c * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, OneChain):
            return NotImplemented
        return self.host == other.host and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(sorted(self._coeffs.items())))

    def __repr__(self) -> str:
        terms = " ".join(f"{c:+d}*e{k}" for k, c in sorted(self._coeffs.items()))
        return f"OneChain({terms or '0'})"


def inner_product(a: OneChain, b: OneChain) -> int:
    a._check(b)
    small, big = (a, b) if len(a._coeffs) <= len(b._coeffs) else (b, a)
    return sum(c * big[k] for k, c in small._coeffs.items())


def boundary(a: OneChain) -> dict[int, int]:
    """0-chain sum of c * (head - tail); zero entries are dropped."""
    out: dict[int, int] = {}
    for eid, c in a._coeffs.items():
        e = a.host.edge(eid)
        if e.is_loop:
            continue
        out[e.head] = out.get(e.head, 0) + c
        out[e.tail] = out.get(e.tail, 0) - c
    return {v: c for v, c in sorted(out.items()) if c}


@dataclass(frozen=True)
class MeshContext:
    """A connected graph with a chosen spanning tree and edge orderings.

    ``cotree_order`` lists e_1..e_N and ``tree_order`` lists f_1..f_n; both
    default to ascending edge id.
    """

    graph: Multigraph
    tree: EdgeSubset
    cotree_order: tuple[int, ...]
    tree_order: tuple[int, ...]

    def __post_init__(self):
        if not is_spanning_tree(self.graph, self.tree):
            raise NotSpanningTree(f"{sorted(self.tree)} is not a spanning tree")
        if sorted(self.tree_order) != sorted(self.tree):
            raise ValueError("tree_order must list exactly the tree edges")
        rest = set(self.graph.edge_ids) - set(self.tree)
        if sorted(self.cotree_order) != sorted(rest) or len(set(self.cotree_order)) != len(rest):
            raise ValueError("cotree_order must list exactly the non-tree edges")

    @classmethod
    def build(
        cls,
        graph: Multigraph,
        tree: Iterable[int] | None = None,
        cotree_order: Iterable[int] | None = None,
        tree_order: Iterable[int] | None = None,
    ) -> "MeshContext":
        tree = frozenset(spanning_tree(graph) if tree is None else tree)
        if tree_order is None:
            tree_order = sorted(tree)
        if cotree_order is None:
            cotree_order = sorted(set(graph.edge_ids) - tree)
        return cls(graph, tree, tuple(cotree_order), tuple(tree_order))

    @property
    def N(self) -> int:
        return len(self.cotree_order)

    @cached_property
    def _rooted(self):
        # Parent pointers of the tree rooted at vertex 0, found by BFS.
        g = self.graph
        adj: list[list] = [[] for _ in range(g.vertex_count)]
        for eid in sorted(self.tree):
            e = g.edge(eid)
            adj[e.tail].append((e.head, e))
            adj[e.head].append((e.tail, e))
        parent = [-1] * g.vertex_count
        parent_edge = [None] * g.vertex_count
        depth = [0] * g.vertex_count
        seen = [False] * g.vertex_count
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w, e in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w], parent_edge[w], depth[w] = u, e, depth[u] + 1
                    queue.append(w)
        return parent, parent_edge, depth

    def tree_path_steps(self, from_v: int, to_v: int) -> list[tuple[int, int, int]]:
        """Steps (edge_id, from, to) walking the tree path from ``from_v`` to ``to_v``."""
        for v in (from_v, to_v):
            if not 0 <= v < self.graph.vertex_count:
                raise ValueError(f"no vertex {v}")
        parent, parent_edge, depth = self._rooted
        up, down = [], []
        a, b = from_v, to_v
        while depth[a] > depth[b]:
            up.append((parent_edge[a].id, a, parent[a]))
            a = parent[a]
        while depth[b] > depth[a]:
            down.append((parent_edge[b].id, parent[b], b))
            b = parent[b]
        while a != b:
            up.append((parent_edge[a].id, a, parent[a]))
            a = parent[a]
            down.append((parent_edge[b].id, parent[b], b))
            b = parent[b]
        return up + down[::-1]

    def check_cotree(self, edge_id: int):
        self.graph.edge(edge_id)
        if edge_id in self.tree:
            raise NotCotreeEdge(f"edge {edge_id} belongs to the spanning tree")


def tree_path(ctx: MeshContext, from_v: int, to_v: int) -> OneChain:
    """Signed chain of the tree path; +1 where traversal follows the edge's orientation."""
    coeffs = {}
    for eid, a, _ in ctx.tree_path_steps(from_v, to_v):
        coeffs[eid] = 1 if ctx.graph.edge(eid).tail == a else -1
    return OneChain(ctx.graph, coeffs)


def d_map(ctx: MeshContext, edge_id: int) -> OneChain:
    """Tree path from head to tail of a cotree edge (zero for loops)."""
    ctx.check_cotree(edge_id)
    e = ctx.graph.edge(edge_id)
    if e.is_loop:
        return OneChain(ctx.graph)
    return tree_path(ctx, e.head, e.tail)


def fundamental_cycle(ctx: MeshContext, edge_id: int) -> OneChain:
    return OneChain.unit(ctx.graph, edge_id) + d_map(ctx, edge_id)
