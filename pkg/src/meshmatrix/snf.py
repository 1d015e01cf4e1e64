"""Smith normal form of integer matrices with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import ExactMatrix


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors of an m x n integer matrix A.

    ``diagonal`` has min(m, n) non-negative entries, nonzero ones first,
    each dividing the next.  When transforms were requested,
    ``left @ A @ right`` is the diagonal matrix.
    """

    diagonal: tuple[int, ...]
    rank: int
    left: Optional[ExactMatrix] = None
    right: Optional[ExactMatrix] = None

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.diagonal[: self.rank]

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.nonzero:
            out *= d
        return out

    def diagonal_matrix(self, shape: tuple[int, int]) -> ExactMatrix:
        m, n = shape
        return ExactMatrix(
            ([self.diagonal[i] if i == j else 0 for j in range(n)] for i in range(m)), ncols=n
        )


def smith_normal_form(m: ExactMatrix, transforms: bool = False) -> SNFResult:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivots on the smallest-magnitude nonzero entry of the remaining block
    and clears its row and column by repeated division with remainder.
    """
    if not m.is_integral():
        raise ValueError("Smith normal form needs integer entries")
    rows, cols = m.shape
    a = m.tolist()
    left = [[int(i == j) for j in range(rows)] for i in range(rows)] if transforms else None
    right = [[int(i == j) for j in range(cols)] for i in range(cols)] if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if right is not None:
            for r in right:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        if left is not None:
            left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        if right is not None:
            for r in right:
                r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if not done:
                # A remainder is smaller than the pivot; move it into place.
                best = min(
                    [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                )
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if left is not None:
                left[t] = [-x for x in left[t]]
        t += 1

    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    rank = sum(1 for d in diag if d)
    return SNFResult(
        diagonal=diag,
        rank=rank,
        left=ExactMatrix(left, ncols=rows) if left is not None else None,
        right=ExactMatrix(right, ncols=cols) if right is not None else None,
    )


def integer_kernel_basis(m: ExactMatrix) -> ExactMatrix:
    """Columns forming a Z-basis of ``{x in Z^n : m @ x = 0}``."""
    res = smith_normal_form(m, transforms=True)
    n = m.ncols
    return res.right.submatrix(range(n), range(res.rank, n))
