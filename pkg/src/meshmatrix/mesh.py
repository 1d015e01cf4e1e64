"""Mesh matrix, reduced mesh matrix and mesh Laplacian of a graph with a spanning tree."""

from __future__ import annotations

from .cycles import MeshContext, d_map, fundamental_cycle, inner_product
from .errors import SignInconsistent, SignUndetermined
from .linalg import ExactMatrix


def build_Y(ctx: MeshContext) -> ExactMatrix:
    """Tree-by-cotree matrix; column j holds the coefficients of D(e_j)."""
    cols = []
    for eid in ctx.cotree_order:
        chain = d_map(ctx, eid)
        cols.append([chain[f] for f in ctx.tree_order])
    return ExactMatrix.from_columns(cols, len(ctx.tree_order))


def cycle_gram(ctx: MeshContext) -> ExactMatrix:
    """Gram matrix of the fundamental cycles under the edge inner product."""
    cycles = [fundamental_cycle(ctx, e) for e in ctx.cotree_order]
    return ExactMatrix([[inner_product(a, b) for b in cycles] for a in cycles], ncols=len(cycles))


def mesh_matrix(ctx: MeshContext) -> ExactMatrix:
    """``Id + Y^t Y``, checked against the Gram matrix of fundamental cycles."""
    y = build_Y(ctx)
    m = ExactMatrix.identity(ctx.N) + y.T @ y
    gram = cycle_gram(ctx)
    if m != gram:
        raise ArithmeticError("Gram matrix of fundamental cycles differs from Id + Y^t Y")
    return m


def reduced_mesh_matrix(ctx: MeshContext) -> ExactMatrix:
    y = build_Y(ctx)
    return y.T @ y


def mesh_laplacian(ctx: MeshContext) -> ExactMatrix:
    y = build_Y(ctx)
    return y @ y.T


def _supporting(ctx: MeshContext) -> list[dict[int, int]]:
    return [d_map(ctx, e).coeffs for e in ctx.cotree_order]


def laplacian_sign(ctx: MeshContext, f_k: int, f_l: int, _chains=None) -> int:
    """Sign of the (f_k, f_l) Laplacian entry for distinct tree edges.

    Computed as the product of the two coefficients in D(e) for the
    smallest-id cotree edge e whose D-chain contains both; every other such
    edge must agree.
    """
    chains = _chains if _chains is not None else dict(zip(ctx.cotree_order, _supporting(ctx)))
    signs = [
        (eid, chain[f_k] * chain[f_l])
        for eid, chain in sorted(chains.items())
        if f_k in chain and f_l in chain
    ]
    if not signs:
        raise SignUndetermined(f"no cotree edge supports both {f_k} and {f_l}")
    first = signs[0][1]
    for eid, s in signs[1:]:
        if s != first:
            raise SignInconsistent(f"edges {signs[0][0]} and {eid} disagree on Sign({f_k},{f_l})")
    return first


def mesh_laplacian_direct(ctx: MeshContext) -> ExactMatrix:
    """The mesh Laplacian assembled by counting supporting cotree edges."""
    chains = dict(zip(ctx.cotree_order, _supporting(ctx)))
    order = ctx.tree_order
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for a, fk in enumerate(order):
        rows[a][a] = sum(1 for c in chains.values() if fk in c)
        for b in range(a):
            fl = order[b]
            count = sum(1 for c in chains.values() if fk in c and fl in c)
            if count:
                s = laplacian_sign(ctx, fk, fl, chains)
                rows[a][b] = rows[b][a] = s * count
    return ExactMatrix(rows, ncols=n)
