"""Acceptance criteria 1-9, one test each.

Each test records a PASS/FAIL line that the terminal summary prints at the
end of the run (see conftest.py); the same line is printed inline with -s.
"""

import random
from fractions import Fraction
import subprocess
import sys
import time
from contextlib import contextmanager
from functools import lru_cache

from conftest import ACCEPTANCE_RESULTS, FIXTURES
from meshmatrix.cw import (
    complex_from_graph,
    enumerate_spanning_forests,
    geometric_mesh,
    integral_mesh_ratio,
    parse_complex,
    torsion_order,
    verify_star,
    verify_theorem_higher,
)
from meshmatrix.cycles import MeshContext
from meshmatrix.flux import all_partitions, cheeger_estimate, flux_report
from meshmatrix.generate import complete_graph, petersen, random_2complex, random_multigraph, small_multigraphs
from meshmatrix.graph import Multigraph, count_spanning_trees, enumerate_spanning_trees
from meshmatrix.kirchhoff import kirchhoff_laplacian, verify_all_minors, verify_cone_identity
from meshmatrix.linalg import ExactMatrix, char_poly_exact, det
from meshmatrix.mesh import mesh_laplacian, mesh_matrix, reduced_mesh_matrix
from meshmatrix.polynomial import Polynomial
from meshmatrix.stpoly import minor_expansion, st_polynomial_dc, st_polynomial_enum
from meshmatrix.torsion import lattice_report
from oracles import charpoly_desc, min_positive

SEED = 20240611


@contextmanager
def criterion(key, name, limit=None):
    info = {"detail": ""}
    start = time.perf_counter()
    try:
        yield info
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except BaseException as exc:
        ACCEPTANCE_RESULTS[key] = (name, False, f"{type(exc).__name__}: {exc}".splitlines()[0])
        print(f"\nFAIL criterion {key}: {name}")
        raise
    detail = f"{info['detail']} ({elapsed:.1f}s)"
    ACCEPTANCE_RESULTS[key] = (name, True, detail)
    print(f"\nPASS criterion {key}: {name} -- {detail}")


@lru_cache(maxsize=None)
def sweep():
    """Every connected multigraph with at most 4 vertices and 6 edges."""
    return tuple(small_multigraphs(4, 6))


def reduced_kirchhoff_det(g):
    lap = kirchhoff_laplacian(g)
    keep = range(1, g.vertex_count)
    return det(lap.submatrix(keep, keep))


def test_criterion_1_trent_determinant():
    cases = {"K3": (complete_graph(3), 3), "K4": (complete_graph(4), 16), "K5": (complete_graph(5), 125), "Petersen": (petersen(), 2000)}
    with criterion(1, "tree count as mesh determinant", limit=10) as info:
        for name, (g, expected) in cases.items():
            ctx = MeshContext.build(g)
            assert det(mesh_matrix(ctx)) == count_spanning_trees(g) == expected, name
        assert reduced_kirchhoff_det(petersen()) == 2000
        info["detail"] = "K3=3 K4=16 K5=125 Petersen=2000"


def test_criterion_2_charpoly_sweep():
    with criterion(2, "charpoly(Mesh)(X) = ST(G,T0)(X-1) over the sweep", limit=60) as info:
        pairs = 0
        for g in sweep():
            for tree in enumerate_spanning_trees(g):
                ctx = MeshContext.build(g, tree)
                cp = char_poly_exact(mesh_matrix(ctx))
                dc = st_polynomial_dc(g, tree)
                en = st_polynomial_enum(g, tree)
                assert cp == dc.shift(-1), (g, tree)
                assert dc == en, (g, tree)
                pairs += 1
        info["detail"] = f"{len(sweep())} graphs, {pairs} (G, T0) pairs"


def test_criterion_3_minor_expansion():
    rng = random.Random(SEED + 3)
    with criterion(3, "principal minor expansion of the mesh charpoly") as info:
        done = 0
        while done < 25:
            g = random_multigraph(rng, max_vertices=5, max_edges=9)
            if len(g.edges) - g.vertex_count + 1 > 5:
                continue
            ctx = MeshContext.build(g, rng.choice(enumerate_spanning_trees(g)))
            n = ctx.N
            oracle = charpoly_desc(mesh_matrix(ctx).tolist())
            coeffs = [(-1) ** j * int(oracle[j]) for j in range(n + 1)]
            assert minor_expansion(ctx) == coeffs, g
            done += 1
        info["detail"] = "25 random graphs with N <= 5"


def test_criterion_4_cone_identity():
    rng = random.Random(SEED + 4)
    with criterion(4, "cone mesh Laplacian equals Deg - Adj") as info:
        for i in range(25):
            h = random_multigraph(rng, max_vertices=6, max_edges=10, connected=i % 2 == 0)
            report = verify_cone_identity(h)
            assert report.entrywise and report.power_relation, h
        k3 = Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
        assert char_poly_exact(verify_cone_identity(k3).cone_mesh_laplacian) == Polynomial.from_descending([1, -6, 9, 0])
        info["detail"] = "25 random graphs, K3 charpoly T^3 - 6T^2 + 9T"


def test_criterion_5_all_minors():
    with criterion(5, "rooted forests = cone trees = Laplacian coefficients") as info:
        for g in sweep():
            report = verify_all_minors(g)
            assert report.ok, (g, report)
        k3 = verify_all_minors(Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)]))
        assert tuple(k3.forest_sums) == tuple(k3.cone_counts) == (1, 6, 9, 0)
        info["detail"] = f"{len(sweep())} graphs, K3 (1, 6, 9, 0)"


def test_criterion_6_lattice_index():
    with criterion(6, "lattice index by block determinant and SNF") as info:
        pairs = 0
        for g in sweep():
            count = count_spanning_trees(g)
            for tree in enumerate_spanning_trees(g):
                report = lattice_report(MeshContext.build(g, tree))
                assert report.block_determinant == report.snf_order == report.mesh_determinant == count, (g, tree)
                pairs += 1
        info["detail"] = f"{pairs} (G, T0) pairs"


def test_criterion_7_flux():
    rng = random.Random(SEED + 7)
    with criterion(7, "flux report, Cheeger direction, eigenvalue oracle") as info:
        c4 = Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        report = flux_report(MeshContext.build(c4, [0, 1, 2]))
        assert abs(report.Lambda - 3) <= 1e-9
        assert abs(report.lam - 2) <= 1e-9
        assert report.inequality_holds is False
        done = partitions = 0
        while done < 25:
            g = random_multigraph(rng, max_vertices=8, max_edges=12)
            ctx = MeshContext.build(g, rng.choice(enumerate_spanning_trees(g)))
            report = flux_report(ctx)
            w = report.w
            if not w.vertices or len(w.vertices) > 10:
                continue
            for parts in all_partitions(w):
                assert report.lam / 2 <= cheeger_estimate(w, parts), (g, parts)
                partitions += 1
            for ours, rows in ((report.Lambda, mesh_laplacian(ctx).tolist()), (report.lam, w.laplacian().tolist())):
                ref = min_positive(rows)
                assert (ours is None) == (ref is None)
                if ref is not None:
                    assert abs(ours - ref) <= 1e-9 * abs(ref)
            done += 1
        info["detail"] = f"C4 ok; 25 random graphs, {partitions} partitions"


def test_criterion_8_cw_identities():
    rng = random.Random(SEED + 8)
    with criterion(8, "CW complex mesh identities", limit=120) as info:
        x = parse_complex((FIXTURES / "two_cells.cw").read_text())
        assert geometric_mesh(x, [0]).mesh == ExactMatrix([[Fraction(13, 4)]])
        integral = integral_mesh_ratio(x, [0])
        assert integral.det_integral == 13 and integral.ratio == 4 and integral.ok
        assert (torsion_order(x, [0]), torsion_order(x, [1]), torsion_order(x)) == (2, 3, 1)
        assert torsion_order(parse_complex((FIXTURES / "rp2.cw").read_text())) == 2

        for _ in range(25):
            y = random_2complex(rng, max_cells2=10)
            v0 = rng.choice(enumerate_spanning_forests(y))
            assert verify_star(y, v0).ok
            assert verify_theorem_higher(y, v0).ok
            assert integral_mesh_ratio(y, v0).ok

        graphs = 0
        for g in sweep():
            xg = complex_from_graph(g)
            assert [frozenset(f) for f in enumerate_spanning_forests(xg)] == enumerate_spanning_trees(g)
            tree = enumerate_spanning_trees(g)[0]
            ctx = MeshContext.build(g, tree)
            gm = geometric_mesh(xg, tree)
            assert gm.mesh == mesh_matrix(ctx) and gm.reduced == reduced_mesh_matrix(ctx)
            assert char_poly_exact(gm.mesh) == char_poly_exact(mesh_matrix(ctx))
            assert verify_star(xg, tree).forest_sum == det(mesh_matrix(ctx))
            graphs += 1
        info["detail"] = f"worked example, RP2, 25 random 2-complexes, {graphs} graphs as 1-complexes"


CLI_RUNS = [
    ["verify", "k4.graph", "--tree", "0,1,2", "--minors"],
    ["mesh", "k4.graph"],
    ["stpoly", "k4.graph", "--subgraph", "0,1,2"],
    ["kirchhoff", "k3.graph"],
    ["allminors", "k3.graph"],
    ["torsion", "petersen.graph"],
    ["flux", "c4.graph", "--tree", "0,1,2"],
    ["cw", "two_cells.cw", "--forest", "0"],
    ["cw", "rp2.cw"],
]


def test_criterion_9_cli_determinism():
    with criterion(9, "byte-identical CLI JSON") as info:
        for argv in CLI_RUNS:
            cmd = [sys.executable, "-m", "meshmatrix", argv[0], str(FIXTURES / argv[1]), *argv[2:], "--json"]
            first = subprocess.run(cmd, capture_output=True, check=True).stdout
            second = subprocess.run(cmd, capture_output=True, check=True).stdout
            assert first and first == second, argv
        info["detail"] = f"{len(CLI_RUNS)} commands run twice"
