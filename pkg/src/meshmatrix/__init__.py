"""Exact mesh matrices and mesh Laplacians of graphs and CW complexes."""

from .cycles import MeshContext, OneChain, boundary, d_map, fundamental_cycle, inner_product, tree_path
from .graph import (
    Edge,
    Multigraph,
    contract_edge,
    delete_edge,
    enumerate_spanning_trees,
    is_connected,
    parse_graph,
    spanning_tree,
)
from .linalg import ExactMatrix, char_poly_exact, det
from .mesh import build_Y, mesh_laplacian, mesh_laplacian_direct, mesh_matrix, reduced_mesh_matrix
from .polynomial import Polynomial
from .stpoly import st_counts_enum, st_polynomial_dc, st_polynomial_enum, verify_theorem1

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "ExactMatrix",
    "MeshContext",
    "Multigraph",
    "OneChain",
    "Polynomial",
    "boundary",
    "build_Y",
    "char_poly_exact",
    "contract_edge",
    "d_map",
    "delete_edge",
    "det",
    "enumerate_spanning_trees",
    "fundamental_cycle",
    "inner_product",
    "is_connected",
    "mesh_laplacian",
    "mesh_laplacian_direct",
    "mesh_matrix",
    "parse_graph",
    "reduced_mesh_matrix",
    "spanning_tree",
    "st_counts_enum",
    "st_polynomial_dc",
    "st_polynomial_enum",
    "tree_path",
    "verify_theorem1",
]
