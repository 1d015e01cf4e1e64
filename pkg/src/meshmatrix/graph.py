"""Oriented multigraphs with loops and parallel edges.

Edges carry stable integer ids that survive deletion and contraction, so a
spanning tree of a minor can be compared directly with edge sets of the
parent graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import LoopContraction, NotConnected, ParseError, UnknownEdge

EdgeSubset = frozenset  # of edge ids

# Above this many non-loop edges, tree enumeration switches from subset
# filtering to deletion/contraction.
SUBSET_FILTER_LIMIT = 20


class Edge(NamedTuple):
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for e in edges:
            if not (0 <= e.tail < self.vertex_count and 0 <= e.head < self.vertex_count):
                raise ValueError(f"edge {e.id} has an endpoint outside 0..{self.vertex_count - 1}")
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Graph whose edge ids are 0, 1, 2, ... in the order given."""
        return cls(vertex_count, tuple(Edge(i, t, h) for i, (t, h) in enumerate(pairs)))

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdge(edge_id) from None

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    @property
    def edge_ids(self) -> list[int]:
        return sorted(self._by_id)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: e.id)

    def restrict(self, edge_ids: Iterable[int]) -> "Multigraph":
        """Same vertices, only the listed edges."""
        keep = set(edge_ids)
        for i in keep:
            self.edge(i)
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if e.id in keep))


def _components(n: int, edges: Iterable[Edge]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = find(e.tail), find(e.head)
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def component_labels(g: Multigraph) -> list[int]:
    """Representative (smallest vertex) of each vertex's component."""
    return _components(g.vertex_count, g.edges)


def is_connected(g: Multigraph) -> bool:
    if g.vertex_count == 0:
        return False
    return len(set(component_labels(g))) == 1


def spanning_tree(g: Multigraph) -> EdgeSubset:
    """Deterministic spanning tree grown from vertex 0.

    Edges are swept in ascending id; an edge joins the tree when exactly
    one endpoint has been reached.  Sweeps repeat until every vertex is
    reached.
    """
    if not is_connected(g):
        raise NotConnected("graph has no spanning tree")
    reached = [False] * g.vertex_count
    reached[0] = True
    count = 1
    tree = []
    ordered = [e for e in g.sorted_edges() if not e.is_loop]
    while count < g.vertex_count:
        for e in ordered:
            if reached[e.tail] != reached[e.head]:
                reached[e.tail] = reached[e.head] = True
                tree.append(e.id)
                count += 1
    return frozenset(tree)


def is_spanning_tree(g: Multigraph, ids: Iterable[int]) -> bool:
    ids = list(ids)
    if len(ids) != g.vertex_count - 1 or len(set(ids)) != len(ids):
        return False
    if not all(g.has_edge(i) for i in ids):
        return False
    return is_connected(g.restrict(ids))


def delete_edge(g: Multigraph, edge_id: int) -> Multigraph:
    g.edge(edge_id)
    return Multigraph(g.vertex_count, tuple(e for e in g.edges if e.id != edge_id))


def contract_edge(g: Multigraph, edge_id: int) -> Multigraph:
    """Merge the endpoints of a non-loop edge.

    The merged vertex takes the smaller index; vertices above the larger
    index shift down by one.  Other edges keep their ids and orientation.
    """
    e = g.edge(edge_id)
    if e.is_loop:
        raise LoopContraction(f"edge {edge_id} is a loop")
    keep, gone = min(e.tail, e.head), max(e.tail, e.head)

    def relabel(v: int) -> int:
        if v == gone:
            return keep
        return v - 1 if v > gone else v

    edges = tuple(Edge(f.id, relabel(f.tail), relabel(f.head)) for f in g.edges if f.id != edge_id)
    return Multigraph(g.vertex_count - 1, edges)


def enumerate_spanning_trees(g: Multigraph) -> list[EdgeSubset]:
    """Every spanning tree, in ascending lexicographic order of sorted ids."""
    if not is_connected(g):
        return []
    candidates = [e for e in g.sorted_edges() if not e.is_loop]
    k = g.vertex_count - 1
    if len(candidates) <= SUBSET_FILTER_LIMIT:
        trees = []
        for combo in combinations(candidates, k):
            labels = _components(g.vertex_count, combo)
            if all(x == 0 for x in labels):
                trees.append(tuple(e.id for e in combo))
    else:
        trees = sorted(tuple(sorted(t)) for t in _trees_by_recursion(g))
    return [frozenset(t) for t in trees]


def _trees_by_recursion(g: Multigraph) -> list[frozenset]:
    if not is_connected(g):
        return []
    edges = [e for e in g.sorted_edges() if not e.is_loop]
    if g.vertex_count == 1:
        return [frozenset()]
    e = edges[0]
    without = _trees_by_recursion(delete_edge(g, e.id))
    with_e = [t | {e.id} for t in _trees_by_recursion(contract_edge(g, e.id))]
    return without + with_e


def count_spanning_trees(g: Multigraph) -> int:
    return len(enumerate_spanning_trees(g))


def parse_graph(text: str) -> Multigraph:
    """Parse the line format ``v <n>`` followed by ``e <tail> <head>`` lines."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                if n is not None:
                    raise ParseError(f"line {lineno}: duplicate vertex line")
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                pairs.append((int(parts[1]), int(parts[2])))
            else:
                raise ParseError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ParseError("missing 'v <n>' line")
    try:
        return Multigraph.from_pairs(n, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Multigraph) -> str:
    """Inverse of :func:`parse_graph` for graphs with ids 0..m-1."""
    lines = [f"v {g.vertex_count}"]
    lines += [f"e {e.tail} {e.head}" for e in g.sorted_edges()]
    return "\n".join(lines) + "\n"
