"""Order of the lattice quotient C_1 / (Z_1 + coboundaries) of a graph."""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import MeshContext, OneChain, fundamental_cycle
from .errors import NotConnected
from .graph import is_connected
from .linalg import ExactMatrix, block, det
from .mesh import build_Y
from .snf import smith_normal_form


def coboundary_basis(ctx: MeshContext) -> list[OneChain]:
    """``b[f_k] = f_k - sum_j Y[k, j] e_j`` for each tree edge, in tree order."""
    y = build_Y(ctx)
    out = []
    for k, f in enumerate(ctx.tree_order):
        coeffs = {f: 1}
        for j, e in enumerate(ctx.cotree_order):
            if y[k, j]:
                coeffs[e] = -y[k, j]
        out.append(OneChain(ctx.graph, coeffs))
    return out


def cut_coboundary(ctx: MeshContext, tree_edge: int) -> OneChain:
    """Image of the indicator of the head side B[k] of a tree edge under the coboundary.

    Removing f_k splits the tree into the tail side A[k] and head side B[k];
    each non-loop edge gets ``chi_B(head) - chi_B(tail)``.
    """
    g = ctx.graph
    f = g.edge(tree_edge)
    if tree_edge not in ctx.tree:
        raise ValueError(f"edge {tree_edge} is not a tree edge")
    # Walk the tree from the head of f without crossing f.
    adj: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for eid in ctx.tree:
        if eid == tree_edge:
            continue
        e = g.edge(eid)
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    side_b = {f.head}
    stack = [f.head]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in side_b:
                side_b.add(w)
                stack.append(w)
    coeffs = {}
    for e in g.edges:
        c = (e.head in side_b) - (e.tail in side_b)
        if c:
            coeffs[e.id] = c
    return OneChain(g, coeffs)


@dataclass
class LatticeIndexReport:
    block_determinant: int
    mesh_determinant: int
    invariant_factors: tuple[int, ...]
    snf_order: int

    @property
    def index(self) -> int:
        return self.block_determinant

    @property
    def ok(self) -> bool:
        return self.block_determinant == self.mesh_determinant == self.snf_order

    def to_dict(self) -> dict:
        return {
            "lattice_index": self.index,
            "block_determinant": self.block_determinant,
            "mesh_determinant": self.mesh_determinant,
            "invariant_factors": list(self.invariant_factors),
            "snf_order": self.snf_order,
            "agree": self.ok,
        }


def lattice_report(ctx: MeshContext) -> LatticeIndexReport:
    if not is_connected(ctx.graph):
        raise NotConnected("lattice index needs a connected graph")
    y = build_Y(ctx)
    n_co, n_tree = ctx.N, len(ctx.tree_order)
    blk = block(
        [
            [ExactMatrix.identity(n_co), -y.T],
            [y, ExactMatrix.identity(n_tree)],
        ]
    )
    block_det = det(blk)
    mesh_det = det(ExactMatrix.identity(n_co) + y.T @ y)
    edge_order = list(ctx.cotree_order) + list(ctx.tree_order)
    chains = [fundamental_cycle(ctx, e) for e in ctx.cotree_order] + coboundary_basis(ctx)
    lattice = ExactMatrix.from_columns([[c[e] for e in edge_order] for c in chains], len(edge_order))
    snf = smith_normal_form(lattice)
    if snf.rank != len(edge_order):
        raise ArithmeticError("cycle and coboundary bases do not span C_1 rationally")
    return LatticeIndexReport(block_det, mesh_det, snf.nonzero, snf.torsion_order)


def lattice_index(ctx: MeshContext) -> int:
    """|C_1 / (Z_1 + Pi B^1)| by block determinant, checked against Smith normal form."""
    report = lattice_report(ctx)
    if not report.ok:
        raise ArithmeticError(
            f"lattice index routes disagree: block {report.block_determinant}, "
            f"mesh {report.mesh_determinant}, SNF {report.snf_order}"
        )
    return report.index
