"""Cone construction, Kirchhoff Laplacian and the all-minors matrix-tree theorem."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .cycles import MeshContext
from .graph import Edge, EdgeSubset, Multigraph, _components
from .linalg import ExactMatrix, char_poly_exact
from .mesh import mesh_laplacian, reduced_mesh_matrix
from .polynomial import Polynomial
from .stpoly import st_counts_enum


@dataclass(frozen=True)
class ConeResult:
    cone_graph: Multigraph
    cone_tree: EdgeSubset
    vertex_to_cone_edge: dict
    apex: int

    def context(self) -> MeshContext:
        """Mesh context on the cone with cone edges ordered by their vertex."""
        order = [self.vertex_to_cone_edge[v] for v in range(self.apex)]
        return MeshContext.build(self.cone_graph, self.cone_tree, tree_order=order)


def cone(h: Multigraph) -> ConeResult:
    """Add an apex W and an edge P -> W for every vertex P.

    Original edge ids are kept; cone edges get the next ids in vertex order.
    """
    n = h.vertex_count
    start = max((e.id for e in h.edges), default=-1) + 1
    cone_edges = tuple(Edge(start + v, v, n) for v in range(n))
    g = Multigraph(n + 1, h.edges + cone_edges)
    return ConeResult(
        cone_graph=g,
        cone_tree=frozenset(e.id for e in cone_edges),
        vertex_to_cone_edge={v: start + v for v in range(n)},
        apex=n,
    )


def incidence_matrix(h: Multigraph) -> ExactMatrix:
    """Vertex-by-edge boundary matrix (head +1, tail -1, loops zero)."""
    edges = h.sorted_edges()
    rows = [[0] * len(edges) for _ in range(h.vertex_count)]
    for j, e in enumerate(edges):
        if not e.is_loop:
            rows[e.head][j] += 1
            rows[e.tail][j] -= 1
    return ExactMatrix(rows, ncols=len(edges))


def kirchhoff_laplacian(h: Multigraph) -> ExactMatrix:
    b = incidence_matrix(h)
    return b @ b.T


def degree_minus_adjacency(h: Multigraph) -> ExactMatrix:
    """Deg - Adj counted directly from the edge list, loops ignored."""
    n = h.vertex_count
    rows = [[0] * n for _ in range(n)]
    for e in h.edges:
        if e.is_loop:
            continue
        rows[e.tail][e.tail] += 1
        rows[e.head][e.head] += 1
        rows[e.tail][e.head] -= 1
        rows[e.head][e.tail] -= 1
    return ExactMatrix(rows, ncols=n)


@dataclass
class ConeIdentityReport:
    laplacian: ExactMatrix
    cone_mesh_laplacian: ExactMatrix
    entrywise: bool
    charpoly_reduced_mesh: Polynomial
    charpoly_mesh_laplacian: Polynomial
    charpoly_laplacian: Polynomial
    power_relation: bool

    @property
    def ok(self) -> bool:
        return self.entrywise and self.power_relation

    def to_dict(self) -> dict:
        return {
            "laplacian": self.laplacian.tolist(),
            "cone_mesh_laplacian": self.cone_mesh_laplacian.tolist(),
            "entrywise": self.entrywise,
            "charpoly_laplacian": self.charpoly_laplacian.to_json(),
            "charpoly_reduced_mesh": self.charpoly_reduced_mesh.to_json(),
            "power_relation": self.power_relation,
        }


def verify_cone_identity(h: Multigraph) -> ConeIdentityReport:
    """Mesh Laplacian of the cone against the Kirchhoff Laplacian of h.

    Rows and columns of the cone's mesh Laplacian are indexed by cone
    edges in vertex order, which matches the vertex indexing of Deg - Adj.
    Also checks ``U^|E(T0)| * cp(Y^t Y) == U^N * cp(Y Y^t)``.
    """
    res = cone(h)
    ctx = res.context()
    lap_cone = mesh_laplacian(ctx)
    lap = degree_minus_adjacency(h)
    cp_reduced = char_poly_exact(reduced_mesh_matrix(ctx))
    cp_lap_cone = char_poly_exact(lap_cone)
    lhs = Polynomial.monomial(len(ctx.tree_order)) * cp_reduced
    rhs = Polynomial.monomial(ctx.N) * cp_lap_cone
    return ConeIdentityReport(
        laplacian=lap,
        cone_mesh_laplacian=lap_cone,
        entrywise=lap_cone == lap == kirchhoff_laplacian(h),
        charpoly_reduced_mesh=cp_reduced,
        charpoly_mesh_laplacian=cp_lap_cone,
        charpoly_laplacian=char_poly_exact(lap),
        power_relation=lhs == rhs,
    )


def spanning_forests(h: Multigraph, edge_count: int):
    """Acyclic edge subsets of the given size (loops excluded), as sorted id tuples."""
    edges = [e for e in h.sorted_edges() if not e.is_loop]
    for combo in combinations(edges, edge_count):
        labels = _components(h.vertex_count, combo)
        if len(set(labels)) == h.vertex_count - edge_count:
            yield combo, labels


def rooted_forest_coefficient(h: Multigraph, j: int) -> int:
    """Sum over spanning forests with j edges of the product of component sizes."""
    n = h.vertex_count
    if not 0 <= j <= n:
        raise ValueError(f"j must lie in 0..{n}")
    total = 0
    for _, labels in spanning_forests(h, j):
        sizes: dict[int, int] = {}
        for lab in labels:
            sizes[lab] = sizes.get(lab, 0) + 1
        total += prod(sizes.values())
    return total


@dataclass
class AllMinorsReport:
    forest_sums: list[int]
    cone_counts: list[int]
    laplacian_coefficients: list[int]

    @property
    def ok(self) -> bool:
        return self.forest_sums == self.cone_counts == self.laplacian_coefficients

    def to_dict(self) -> dict:
        return {
            "rooted_forests": self.forest_sums,
            "cone_tree_counts": self.cone_counts,
            "laplacian_coefficients": self.laplacian_coefficients,
            "all_minors": self.ok,
        }


def verify_all_minors(h: Multigraph) -> AllMinorsReport:
    """Rooted forest counts, cone tree counts and signed Laplacian coefficients for j = 0..|V|."""
    n = h.vertex_count
    forests = [rooted_forest_coefficient(h, j) for j in range(n + 1)]
    res = cone(h)
    counts = st_counts_enum(res.cone_graph, res.cone_tree)
    # A cone tree has exactly n edges, so counts beyond j = n vanish.
    if any(counts[n + 1:]):
        raise ArithmeticError("cone tree uses more than |V(H)| edges of H")
    counts = (counts + [0] * (n + 1))[: n + 1]
    cp = char_poly_exact(kirchhoff_laplacian(h))
    coeffs = [(-1) ** j * cp.coeff(n - j) for j in range(n + 1)]
    return AllMinorsReport(forests, counts, coeffs)
