"""Cotree edge types, the derived graph W and eigenvalue/flux comparisons.

Eigenvalues here are floating point; every matrix they come from is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .cycles import MeshContext
from .errors import ImproperPartition, NonSymmetric, NotType3, TooLarge
from .graph import Multigraph, component_labels
from .kirchhoff import kirchhoff_laplacian
from .linalg import ExactMatrix
from .mesh import mesh_laplacian

# Exhaustive partition search is offered up to this many W-vertices.
PARTITION_SEARCH_LIMIT = 12


class EdgeType(enum.IntEnum):
    LOOP = 1
    ADJACENT = 2
    LONG_PATH = 3


class DirectedEdge(tuple):
    """A tree edge with a direction: ``(edge_id, from_vertex, to_vertex)``."""

    __slots__ = ()

    def __new__(cls, edge_id: int, from_v: int, to_v: int):
        return super().__new__(cls, (edge_id, from_v, to_v))

    @property
    def edge_id(self) -> int:
        return self[0]

    def sign(self, host: Multigraph) -> int:
        """+1 if the direction agrees with the stored orientation."""
        return 1 if host.edge(self[0]).tail == self[1] else -1

    def __repr__(self) -> str:
        return f"e{self[0]}:{self[1]}->{self[2]}"


def classify_edge(ctx: MeshContext, edge_id: int) -> EdgeType:
    ctx.check_cotree(edge_id)
    e = ctx.graph.edge(edge_id)
    if e.is_loop:
        return EdgeType.LOOP
    steps = ctx.tree_path_steps(e.head, e.tail)
    return EdgeType.ADJACENT if len(steps) == 1 else EdgeType.LONG_PATH


def inward_edges(ctx: MeshContext, edge_id: int) -> tuple[DirectedEdge, DirectedEdge]:
    """First and last edges of the tree path closing a type 3 edge, both pointing into the path.

    The path runs from head(e) to tail(e); F1 leaves head(e) along it and
    F2 leaves tail(e) backwards along it.
    """
    if classify_edge(ctx, edge_id) is not EdgeType.LONG_PATH:
        raise NotType3(f"edge {edge_id} is not of type 3")
    e = ctx.graph.edge(edge_id)
    steps = ctx.tree_path_steps(e.head, e.tail)
    first, last = steps[0], steps[-1]
    f1 = DirectedEdge(first[0], first[1], first[2])
    f2 = DirectedEdge(last[0], last[2], last[1])
    return f1, f2


@dataclass
class WGraph:
    vertices: list[DirectedEdge]
    edges: list[tuple[int, int, int]]  # (cotree edge id, vertex index, vertex index)
    components: list[list[int]] = field(default_factory=list)

    def as_multigraph(self) -> Multigraph:
        return Multigraph(len(self.vertices), tuple((k, a, b) for k, (_, a, b) in enumerate(self.edges)))

    def laplacian(self) -> ExactMatrix:
        return kirchhoff_laplacian(self.as_multigraph())


def build_w(ctx: MeshContext) -> WGraph:
    """W has the inward edges as vertices and one edge per type 3 cotree edge."""
    pairs = []
    for eid in sorted(ctx.cotree_order):
        if classify_edge(ctx, eid) is EdgeType.LONG_PATH:
            pairs.append((eid, *inward_edges(ctx, eid)))
    vertices = sorted({x for _, a, b in pairs for x in (a, b)})
    index = {x: i for i, x in enumerate(vertices)}
    edges = [(eid, index[a], index[b]) for eid, a, b in pairs]
    w = WGraph(vertices, edges)
    labels = component_labels(w.as_multigraph()) if vertices else []
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        groups.setdefault(lab, []).append(v)
    w.components = [groups[k] for k in sorted(groups)]
    return w


def default_tol(m: ExactMatrix) -> float:
    biggest = max((abs(float(x)) for r in m.rows() for x in r), default=0.0)
    return 1e-9 * (1 + biggest)


def min_positive_eigenvalue(m: ExactMatrix, tol: Optional[float] = None) -> Optional[float]:
    """Smallest eigenvalue above ``tol``, or None when there is none."""
    if not m.is_symmetric():
        raise NonSymmetric("eigenvalues requested for a non-symmetric matrix")
    if m.nrows == 0:
        return None
    if tol is None:
        tol = default_tol(m)
    vals = np.linalg.eigvalsh(m.to_numpy())
    positive = vals[vals > tol]
    return float(positive.min()) if positive.size else None


def _tree_vector(ctx: MeshContext, x: DirectedEdge) -> np.ndarray:
    vec = np.zeros(len(ctx.tree_order))
    vec[ctx.tree_order.index(x.edge_id)] = x.sign(ctx.graph)
    return vec


def restricted_rayleigh(ctx: MeshContext, w: Optional[WGraph] = None) -> Optional[float]:
    """Minimum Rayleigh quotient of the mesh Laplacian on span(X) minus the W-component sums.

    This is the subspace the flux estimate's proof works on: vectors
    supported on the inward edges X, orthogonal to each component sum
    S[k].  None when that subspace is zero.
    """
    if w is None:
        w = build_w(ctx)
    if not w.vertices:
        return None
    basis = np.column_stack([_tree_vector(ctx, x) for x in w.vertices])
    sums = np.column_stack([basis[:, comp].sum(axis=1) for comp in w.components])
    # Orthonormal basis of span(X) and of the part orthogonal to the S[k].
    q_x = _orth(basis)
    proj = q_x.T @ sums
    q_s = _orth(proj)
    if q_s.shape[1]:
        complement = q_x @ _null_complement(q_s, q_x.shape[1])
    else:
        complement = q_x
    if complement.shape[1] == 0:
        return None
    lap = mesh_laplacian(ctx).to_numpy()
    restricted = complement.T @ lap @ complement
    return float(np.linalg.eigvalsh((restricted + restricted.T) / 2).min())


def _orth(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    if a.size == 0:
        return np.zeros((a.shape[0], 0))
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    return u[:, s > tol * max(1.0, s.max() if s.size else 1.0)]


def _null_complement(q: np.ndarray, dim: int) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the columns of q in R^dim."""
    u, s, _ = np.linalg.svd(q, full_matrices=True)
    r = q.shape[1]
    return u[:, r:dim]


def identification_exact(ctx: MeshContext, w: Optional[WGraph] = None) -> bool:
    """Whether D* restricted to span(X) is exactly the coboundary of W.

    True when no X edge lies inside a type 3 path or on a type 2 edge's
    path, and no tree edge occurs in X with both directions.  Only then does
    the restricted quotient equal the smallest positive eigenvalue of W.
    """
    if w is None:
        w = build_w(ctx)
    ids = [x.edge_id for x in w.vertices]
    if len(set(ids)) != len(ids):
        return False
    in_x = set(ids)
    for eid in ctx.cotree_order:
        kind = classify_edge(ctx, eid)
        if kind is EdgeType.LOOP:
            continue
        e = ctx.graph.edge(eid)
        steps = ctx.tree_path_steps(e.head, e.tail)
        inner = steps if kind is EdgeType.ADJACENT else steps[1:-1]
        if any(s[0] in in_x for s in inner):
            return False
    return True


@dataclass
class FluxReport:
    Lambda: Optional[float]
    lam: Optional[float]
    restricted_quotient: Optional[float]
    identification_exact: bool
    w: WGraph
    tol_mesh: float
    tol_w: float

    @property
    def Lambda_defined(self) -> bool:
        return self.Lambda is not None

    @property
    def lambda_defined(self) -> bool:
        return self.lam is not None

    @property
    def inequality_holds(self) -> Optional[bool]:
        """Lambda <= lambda, or None when either side is undefined (vacuous)."""
        if self.Lambda is None or self.lam is None:
            return None
        return self.Lambda <= self.lam + max(self.tol_mesh, self.tol_w)

    @property
    def verdict(self) -> str:
        holds = self.inequality_holds
        return "vacuous" if holds is None else ("holds" if holds else "fails")

    def to_dict(self) -> dict:
        return {
            "Lambda": self.Lambda,
            "lambda": self.lam,
            "restricted_quotient": self.restricted_quotient,
            "identification_exact": self.identification_exact,
            "w_vertices": [repr(x) for x in self.w.vertices],
            "w_edges": [[eid, a, b] for eid, a, b in self.w.edges],
            "w_components": self.w.components,
            "tol_mesh": self.tol_mesh,
            "tol_w": self.tol_w,
            "verdict": {
                "Lambda_defined": self.Lambda_defined,
                "lambda_defined": self.lambda_defined,
                "inequality_holds": self.inequality_holds,
                "status": self.verdict,
            },
        }


def flux_report(ctx: MeshContext) -> FluxReport:
    """Report Lambda (mesh Laplacian) and lambda (Laplacian of W) without asserting Lambda <= lambda."""
    lap = mesh_laplacian(ctx)
    w = build_w(ctx)
    lw = w.laplacian()
    return FluxReport(
        Lambda=min_positive_eigenvalue(lap),
        lam=min_positive_eigenvalue(lw),
        restricted_quotient=restricted_rayleigh(ctx, w),
        identification_exact=identification_exact(ctx, w),
        w=w,
        tol_mesh=default_tol(lap),
        tol_w=default_tol(lw),
    )


def cheeger_estimate(w: WGraph, parts: Sequence[Sequence[int]]) -> float:
    """Minimum over components of cut(C, D) / min(|C|, |D|).

    ``parts[k]`` lists the W-vertex indices of C[k], a proper nonempty
    subset of component k; D[k] is the rest of that component.
    """
    if len(parts) != len(w.components):
        raise ImproperPartition(f"need one subset per component ({len(w.components)})")
    best = None
    for comp, chosen in zip(w.components, parts):
        members = set(comp)
        c = set(chosen)
        if not c or not c < members:
            raise ImproperPartition(f"{sorted(c)} is not a proper nonempty subset of {sorted(members)}")
        d = members - c
        cut = sum(1 for _, a, b in w.edges if (a in c and b in d) or (a in d and b in c))
        ratio = cut / min(len(c), len(d))
        best = ratio if best is None else min(best, ratio)
    return best


def all_partitions(w: WGraph):
    """Every choice of proper nonempty C[k] per component, in a fixed order."""
    if len(w.vertices) > PARTITION_SEARCH_LIMIT:
        raise TooLarge(f"W has {len(w.vertices)} vertices; limit {PARTITION_SEARCH_LIMIT}")
    per_comp = []
    for comp in w.components:
        options = []
        for mask in range(1, 2 ** len(comp) - 1):
            options.append([v for i, v in enumerate(comp) if mask >> i & 1])
        per_comp.append(options)
    return product(*per_comp)


def best_cheeger_estimate(w: WGraph) -> tuple[float, list[list[int]]]:
    """Smallest cheeger_estimate over all partitions, with a minimizing partition."""
    best = None
    for parts in all_partitions(w):
        val = cheeger_estimate(w, parts)
        if best is None or val < best[0]:
            best = (val, [list(p) for p in parts])
    if best is None:
        raise ImproperPartition("W has no vertices to partition")
    return best
