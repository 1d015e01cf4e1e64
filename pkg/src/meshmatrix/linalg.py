"""Dense exact matrices over the integers and rationals.

Entries are Python ints or :class:`fractions.Fraction`; nothing here ever
touches floating point except :meth:`ExactMatrix.to_numpy`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonSquare
from .polynomial import Number, Polynomial, interpolate


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


class ExactMatrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Number]], ncols: int | None = None):
        data = tuple(tuple(_norm(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def zeros(cls, m: int, n: int) -> "ExactMatrix":
        return cls(([0] * n for _ in range(m)), ncols=n)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]], nrows: int) -> "ExactMatrix":
        return cls(([c[i] for c in columns] for i in range(nrows)), ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix((self.col(j) for j in range(self.ncols)), ncols=self.nrows)

    def transpose(self) -> "ExactMatrix":
        return self.T

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(([self._rows[i][j] for j in cols] for i in rows), ncols=len(cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix(
            ([a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)),
            ncols=self.ncols,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(([-a for a in r] for r in self._rows), ncols=self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c: Number) -> "ExactMatrix":
        return ExactMatrix(([c * a for a in r] for r in self._rows), ncols=self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        return ExactMatrix(
            ([sum(a * b for a, b in zip(r, c) if a and b) for c in cols] for r in self._rows),
            ncols=other.ncols,
        )

    def to_numpy(self):
        import numpy as np

        return np.array([[float(x) for x in r] for r in self._rows], dtype=float).reshape(
            self.nrows, self.ncols
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.tolist()!r})"


def block(blocks: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    """Assemble a block matrix from a grid of ExactMatrix blocks."""
    rows = []
    for brow in blocks:
        height = brow[0].nrows
        for i in range(height):
            rows.append([x for b in brow for x in b.row(i)])
    ncols = sum(b.ncols for b in blocks[0]) if blocks else 0
    return ExactMatrix(rows, ncols=ncols)


def det(m: ExactMatrix) -> Number:
    """Exact determinant.

    Integer input uses fraction-free Bareiss elimination, so every
    intermediate stays an integer; rational input uses Fraction elimination.
    """
    if not m.is_square:
        raise NonSquare(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return 1
    if m.is_integral():
        return _bareiss(m.tolist())
    a = [[Fraction(x) for x in r] for r in m.rows()]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        result *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return _norm(result)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def char_poly_exact(m: ExactMatrix) -> Polynomial:
    """``det(X*Id - m)`` by exact evaluation at X = 0..n and interpolation.

    Integer input yields integer coefficients; this is asserted, since a
    non-integral coefficient would mean an arithmetic bug upstream.
    """
    if not m.is_square:
        raise NonSquare(f"characteristic polynomial of non-square {m.shape} matrix")
    n = m.nrows
    values = []
    for x in range(n + 1):
        shifted = ExactMatrix(
            ([(x if i == j else 0) - m[i, j] for j in range(n)] for i in range(n)), ncols=n
        )
        values.append(det(shifted))
    p = interpolate(values)
    if m.is_integral() and not p.is_integral():
        raise ArithmeticError(f"non-integral characteristic polynomial {p!r}")
    assert p.degree == n and p.leading == 1
    return p


def rref(m: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[Fraction(x) for x in r] for r in m.rows()]
    pivots = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return a, pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def solve(a: ExactMatrix, b: Sequence[Number]) -> list[Number]:
    """Unique exact solution of ``a @ x = b`` for full-column-rank ``a``.

    Raises ValueError if ``a`` is rank deficient or the system is
    inconsistent.
    """
    aug = ExactMatrix((list(r) + [bi] for r, bi in zip(a.rows(), b)), ncols=a.ncols + 1)
    red, pivots = rref(aug)
    if a.ncols in pivots:
        raise ValueError("inconsistent linear system")
    if pivots != list(range(a.ncols)):
        raise ValueError("coefficient matrix is rank deficient")
    return [_norm(red[i][a.ncols]) for i in range(a.ncols)]
