import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from meshmatrix.cycles import MeshContext
from meshmatrix.errors import ImproperPartition, NonSymmetric, NotType3
from meshmatrix.flux import (
    DirectedEdge,
    EdgeType,
    all_partitions,
    best_cheeger_estimate,
    build_w,
    cheeger_estimate,
    classify_edge,
    flux_report,
    inward_edges,
    min_positive_eigenvalue,
)
from meshmatrix.graph import Multigraph, enumerate_spanning_trees
from meshmatrix.linalg import ExactMatrix
from meshmatrix.mesh import mesh_laplacian
from oracles import min_positive


def test_c4_report(c4):
    ctx = MeshContext.build(c4, [0, 1, 2])
    assert classify_edge(ctx, 3) is EdgeType.LONG_PATH
    assert inward_edges(ctx, 3) == (DirectedEdge(0, 0, 1), DirectedEdge(2, 3, 2))
    report = flux_report(ctx)
    assert report.Lambda == pytest.approx(3, abs=1e-9)
    assert report.lam == pytest.approx(2, abs=1e-9)
    assert report.inequality_holds is False
    assert report.verdict == "fails"
    assert report.identification_exact
    assert report.restricted_quotient == pytest.approx(2, abs=1e-9)


def test_edge_types():
    g = Multigraph.from_pairs(3, [(0, 1), (1, 2), (0, 0), (1, 0), (2, 0)])
    ctx = MeshContext.build(g, [0, 1])
    assert classify_edge(ctx, 2) is EdgeType.LOOP
    assert classify_edge(ctx, 3) is EdgeType.ADJACENT
    assert classify_edge(ctx, 4) is EdgeType.LONG_PATH
    with pytest.raises(NotType3):
        inward_edges(ctx, 3)


def test_parallel_chords_make_multigraph_w():
    g = Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 0)])
    w = build_w(MeshContext.build(g, [0, 1, 2]))
    assert len(w.vertices) == 2 and len(w.edges) == 2
    assert w.laplacian() == ExactMatrix([[2, -2], [-2, 2]])


def test_vacuous_without_type3(k3):
    report = flux_report(MeshContext.build(Multigraph.from_pairs(2, [(0, 1), (0, 1)]), [0]))
    assert report.lam is None
    assert report.inequality_holds is None and report.verdict == "vacuous"
    assert report.restricted_quotient is None


def test_min_positive_eigenvalue_edges():
    assert min_positive_eigenvalue(ExactMatrix.zeros(2, 2)) is None
    assert min_positive_eigenvalue(ExactMatrix.zeros(0, 0)) is None
    with pytest.raises(NonSymmetric):
        min_positive_eigenvalue(ExactMatrix([[0, 1], [0, 0]]))


def test_cheeger_partition_validation(c4):
    w = build_w(MeshContext.build(c4, [0, 1, 2]))
    assert cheeger_estimate(w, [[0]]) == 1.0
    with pytest.raises(ImproperPartition):
        cheeger_estimate(w, [[0, 1]])
    with pytest.raises(ImproperPartition):
        cheeger_estimate(w, [])
    assert best_cheeger_estimate(w) == (1.0, [[0]])


@given(multigraphs(max_vertices=7, max_edges=11), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_eigenvalues_match_mpmath(g, rnd):
    ctx = MeshContext.build(g, rnd.choice(enumerate_spanning_trees(g)))
    report = flux_report(ctx)
    for ours, rows in ((report.Lambda, mesh_laplacian(ctx).tolist()), (report.lam, report.w.laplacian().tolist())):
        ref = min_positive(rows)
        if ref is None:
            assert ours is None
        else:
            assert ours == pytest.approx(ref, rel=1e-9)


@given(multigraphs(max_vertices=7, max_edges=11), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_cheeger_direction_and_identification(g, rnd):
    ctx = MeshContext.build(g, rnd.choice(enumerate_spanning_trees(g)))
    report = flux_report(ctx)
    w = report.w
    if not w.vertices or len(w.vertices) > 10:
        return
    for parts in all_partitions(w):
        assert report.lam / 2 <= cheeger_estimate(w, parts) + 1e-9
    if report.identification_exact:
        assert report.restricted_quotient == pytest.approx(report.lam, rel=1e-9, abs=1e-9)
