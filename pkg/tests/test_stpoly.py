from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from meshmatrix.cycles import MeshContext
from meshmatrix.generate import complete_graph, petersen
from meshmatrix.graph import Multigraph, enumerate_spanning_trees
from meshmatrix.linalg import char_poly_exact
from meshmatrix.mesh import mesh_matrix
from meshmatrix.polynomial import Polynomial, X
from meshmatrix.stpoly import (
    minor_expansion,
    st_counts_enum,
    st_polynomial_dc,
    st_polynomial_enum,
    verify_theorem1,
)
from oracles import charpoly_desc


def test_k4_star_example(k4):
    assert st_counts_enum(k4, [0, 1, 2]) == [1, 6, 9, 0]
    expected = Polynomial.from_descending([1, -6, 9, 0])
    assert st_polynomial_enum(k4, [0, 1, 2]) == expected
    assert st_polynomial_dc(k4, [0, 1, 2]) == expected
    ctx = MeshContext.build(k4, [0, 1, 2])
    assert char_poly_exact(mesh_matrix(ctx)) == expected.shift(-1)


def test_digon_sign():
    # Deleting the lone H edge leaves the other edge as the only tree.
    g = Multigraph.from_pairs(2, [(0, 1), (0, 1)])
    assert st_polynomial_enum(g, [0]) == X - 1
    assert st_polynomial_dc(g, [0]) == X - 1


def test_loop_multiplies_by_x():
    g = Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    looped = Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0), (1, 1)])
    assert st_polynomial_dc(looped, [0, 1]) == X * st_polynomial_dc(g, [0, 1])
    assert st_polynomial_dc(looped, [0, 1, 3]) == st_polynomial_dc(g, [0, 1])


def test_disconnected_is_zero():
    g = Multigraph.from_pairs(3, [(0, 1)])
    assert st_polynomial_dc(g, []) == Polynomial([])
    assert st_polynomial_enum(g, []) == Polynomial([])


@given(multigraphs(max_vertices=4, max_edges=7), st.randoms(use_true_random=False))
def test_dc_matches_enumeration_for_any_subgraph(g, rnd):
    h = [e for e in g.edge_ids if rnd.random() < 0.5]
    assert st_polynomial_dc(g, h) == st_polynomial_enum(g, h)
    assert st_polynomial_dc(g, h, memoize=True) == st_polynomial_dc(g, h)


@given(multigraphs(), st.randoms(use_true_random=False))
def test_counts_sum_and_degree(g, rnd):
    h = rnd.choice(enumerate_spanning_trees(g))
    counts = st_counts_enum(g, h)
    assert sum(counts) == len(enumerate_spanning_trees(g))
    assert counts[0] == 1
    poly = st_polynomial_enum(g, h)
    assert poly.degree == len(g.edges) - len(h)


@given(multigraphs(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_charpoly_identity_with_sympy_oracle(g, rnd):
    ctx = MeshContext.build(g, rnd.choice(enumerate_spanning_trees(g)))
    report = verify_theorem1(ctx, minors=True)
    assert report.ok
    oracle = charpoly_desc(mesh_matrix(ctx).tolist())
    assert report.charpoly == Polynomial.from_descending([int(c) for c in oracle])


def test_minor_expansion_k4(k4):
    ctx = MeshContext.build(k4, [0, 1, 2])
    assert minor_expansion(ctx) == [1, 9, 24, 16]


def test_report_serializes(k3):
    d = verify_theorem1(MeshContext.build(k3, [0, 1])).to_dict()
    assert d["theorem1"] and d["trent"]
    assert d["det"] == 3 and d["tree_count"] == 3
    assert "lemma" not in d


def test_petersen_and_k5():
    assert verify_theorem1(MeshContext.build(complete_graph(5))).det_mesh == 125
    ctx = MeshContext.build(petersen())
    report = verify_theorem1(ctx)
    assert report.ok and report.det_mesh == 2000


def _ascending_dc(g, h):
    # Same counts with powers X^j instead of X^(N-j): sign and X attach to the contraction term.
    from meshmatrix.graph import contract_edge, delete_edge, is_connected

    if not is_connected(g):
        return Polynomial([])
    if not g.edges:
        return Polynomial([1])
    e = g.sorted_edges()[0]
    rest = h - {e.id}
    if e.is_loop:
        return _ascending_dc(delete_edge(g, e.id), rest)
    if e.id in h:
        return _ascending_dc(delete_edge(g, e.id), rest) + _ascending_dc(contract_edge(g, e.id), rest)
    return _ascending_dc(delete_edge(g, e.id), h) - X * _ascending_dc(contract_edge(g, e.id), h)


@given(multigraphs(max_vertices=4, max_edges=6), st.randoms(use_true_random=False))
def test_ascending_recursion_gives_reversed_polynomial(g, rnd):
    h = frozenset(e for e in g.edge_ids if rnd.random() < 0.5)
    counts = st_counts_enum(g, h)
    assert _ascending_dc(g, h) == Polynomial([(-1) ** j * c for j, c in enumerate(counts)])
