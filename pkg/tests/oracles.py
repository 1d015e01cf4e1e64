"""Independent reference computations used by the tests (sympy / mpmath based)."""

import mpmath
import sympy


def kirchhoff_rows(g):
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for e in g.edges:
        if e.is_loop:
            continue
        lap[e.tail][e.tail] += 1
        lap[e.head][e.head] += 1
        lap[e.tail][e.head] -= 1
        lap[e.head][e.tail] -= 1
    return lap


def tree_count(g):
    """Matrix-tree count via sympy's determinant of the reduced Laplacian."""
    lap = kirchhoff_rows(g)
    if g.vertex_count == 1:
        return 1
    reduced = sympy.Matrix([row[1:] for row in lap[1:]])
    return int(reduced.det())


def charpoly_desc(rows):
    n = len(rows)
    if n == 0:
        return [1]
    return [sympy.nsimplify(c) for c in sympy.Matrix(rows).charpoly().all_coeffs()]


def eigenvalues(rows, dps=40):
    """Sorted eigenvalues of a symmetric matrix via mpmath at high precision."""
    if not rows:
        return []
    with mpmath.workdps(dps):
        evals = mpmath.eigsy(mpmath.matrix(rows), eigvals_only=True)
        return sorted(float(v) for v in evals)


def min_positive(rows, tol=1e-9):
    pos = [v for v in eigenvalues(rows) if v > tol]
    return min(pos) if pos else None
