"""Small test corpora: exhaustive multigraph sweeps and random graphs and complexes."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterator

from .cw import CWComplex
from .graph import Edge, Multigraph, is_connected
from .linalg import ExactMatrix
from .snf import integer_kernel_basis


def small_multigraphs(
    max_vertices: int, max_edges: int, connected: bool = True
) -> Iterator[Multigraph]:
    """Every labeled multigraph up to the given sizes, loops and parallels included.

    Edge multisets are drawn from the vertex pairs (u, v) with u <= v and
    oriented u -> v; ids follow the sorted multiset order.
    """
    for n in range(1, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        for m in range(max_edges + 1):
            for multiset in combinations_with_replacement(slots, m):
                g = Multigraph.from_pairs(n, multiset)
                if not connected or is_connected(g):
                    yield g


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 5,
    max_edges: int = 8,
    connected: bool = True,
    loop_prob: float = 0.1,
) -> Multigraph:
    """Random multigraph with random orientations.

    Connected graphs start from a random tree so they never need rejection.
    """
    n = rng.randint(1, max_vertices)
    pairs = []
    if connected:
        for v in range(1, n):
            pairs.append((v, rng.randrange(v)))
    extra = rng.randint(0, max(0, max_edges - len(pairs)))
    for _ in range(extra):
        if rng.random() < loop_prob:
            v = rng.randrange(n)
            pairs.append((v, v))
        else:
            pairs.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(pairs)
    pairs = [(a, b) if rng.random() < 0.5 else (b, a) for a, b in pairs]
    return Multigraph.from_pairs(n, pairs)


def relabel(g: Multigraph, rng: random.Random, flip_prob: float = 0.5) -> Multigraph:
    """Randomly permute vertices and edge ids and reverse some orientations."""
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    ids = [e.id for e in g.edges]
    new_ids = rng.sample(range(3 * len(ids) + 1), len(ids))
    edges = []
    for e, nid in zip(g.edges, new_ids):
        t, h = perm[e.tail], perm[e.head]
        if rng.random() < flip_prob:
            t, h = h, t
        edges.append(Edge(nid, t, h))
    return Multigraph(g.vertex_count, tuple(edges))


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_pairs(10, outer + spokes + inner)


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def random_2complex(
    rng: random.Random,
    max_cells0: int = 3,
    max_cells1: int = 5,
    max_cells2: int = 10,
    coeff: int = 2,
) -> CWComplex:
    """Random valid 2-complex: ∂_2 columns are random integer combinations of a basis of ker ∂_1."""
    n0 = rng.randint(1, max_cells0)
    n1 = rng.randint(1, max_cells1)
    rows = [[0] * n1 for _ in range(n0)]
    for j in range(n1):
        a, b = rng.randrange(n0), rng.randrange(n0)
        if a != b:
            rows[b][j] += 1
            rows[a][j] -= 1
    d1 = ExactMatrix(rows, ncols=n1)
    kernel = integer_kernel_basis(d1)
    n2 = rng.randint(1, max_cells2)
    r = kernel.ncols
    cols = []
    for _ in range(n2):
        mix = [rng.randint(-coeff, coeff) for _ in range(r)]
        cols.append([sum(kernel[i, k] * mix[k] for k in range(r)) for i in range(n1)])
    d2 = ExactMatrix.from_columns(cols, n1)
    return CWComplex((d1, d2))


def random_complex_with_forest(rng: random.Random, **kw) -> tuple[CWComplex, tuple]:
    from .cw import enumerate_spanning_forests

    x = random_2complex(rng, **kw)
    forests = enumerate_spanning_forests(x)
    return x, rng.choice(forests)
