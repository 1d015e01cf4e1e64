"""Mesh matrices of finite CW complexes given by integer boundary matrices.

A complex of dimension d is the list of boundary matrices
``boundaries[k-1] = ∂_k`` of shape ``n_(k-1) x n_k`` for k = 1..d.  A
spanning forest is a set of top cells whose boundary columns form a
rational basis of the image of ∂_d.  Torsion weights t(X_V) are orders of
the torsion of H_(d-1) of the subcomplex keeping only the top cells V.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import InvalidComplex, NotSpanningForest, ParseError, TooLarge
from .graph import Multigraph
from .kirchhoff import incidence_matrix
from .linalg import ExactMatrix, char_poly_exact, det, rank, solve
from .polynomial import Polynomial
from .snf import integer_kernel_basis, smith_normal_form

FOREST_ENUMERATION_LIMIT = 20

ForestCW = tuple  # sorted tuple of top-cell indices


@dataclass(frozen=True)
class CWComplex:
    boundaries: tuple[ExactMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        for k in range(1, len(self.boundaries)):
            if self.boundaries[k - 1].ncols != self.boundaries[k].nrows:
                raise InvalidComplex(f"boundary {k} and {k + 1} have incompatible shapes")
        for b in self.boundaries:
            if not b.is_integral():
                raise InvalidComplex("boundary matrices must be integral")

    @property
    def dimension(self) -> int:
        return len(self.boundaries)

    @property
    def cell_counts(self) -> list[int]:
        if not self.boundaries:
            return []
        return [self.boundaries[0].nrows] + [b.ncols for b in self.boundaries]

    @property
    def top(self) -> ExactMatrix:
        """∂_d."""
        return self.boundaries[-1]

    @property
    def below(self) -> ExactMatrix:
        """∂_(d-1); the zero map out of C_0 when d = 1."""
        if self.dimension >= 2:
            return self.boundaries[-2]
        return ExactMatrix.zeros(0, self.top.nrows)

    @property
    def n_top(self) -> int:
        return self.top.ncols

    @cached_property
    def top_rank(self) -> int:
        return rank(self.top)

    @cached_property
    def cycle_basis_below(self) -> ExactMatrix:
        """Integer basis of ker ∂_(d-1), as columns."""
        return integer_kernel_basis(self.below)

    def columns(self, cells: Iterable[int]) -> ExactMatrix:
        return self.top.submatrix(range(self.top.nrows), list(cells))


def validate_complex(x: CWComplex) -> bool:
    """True when every composite ∂_(k-1) ∂_k vanishes."""
    for k in range(1, x.dimension):
        prod_ = x.boundaries[k - 1] @ x.boundaries[k]
        if any(v for r in prod_.rows() for v in r):
            return False
    return True


def complex_from_graph(g: Multigraph) -> CWComplex:
    """A graph as a 1-complex; top cells are edges in ascending id."""
    return CWComplex((incidence_matrix(g),))


def _require_valid(x: CWComplex):
    if not validate_complex(x):
        raise InvalidComplex("boundary of a boundary is nonzero")


def is_spanning_forest(x: CWComplex, cells: Iterable[int]) -> bool:
    cells = sorted(set(cells))
    if any(not 0 <= c < x.n_top for c in cells):
        return False
    return len(cells) == x.top_rank and rank(x.columns(cells)) == len(cells)


def enumerate_spanning_forests(x: CWComplex) -> list[ForestCW]:
    _require_valid(x)
    if x.n_top > FOREST_ENUMERATION_LIMIT:
        raise TooLarge(f"{x.n_top} top cells; limit {FOREST_ENUMERATION_LIMIT}")
    r = x.top_rank
    return [c for c in combinations(range(x.n_top), r) if rank(x.columns(c)) == r]


def torsion_order(x: CWComplex, cells: Optional[Iterable[int]] = None) -> int:
    """|Tors H_(d-1)(X_V)| for V = ``cells`` (all top cells when None).

    Expresses ∂_d of the chosen cells in an integer basis of ker ∂_(d-1)
    and multiplies the nonzero invariant factors of the result.
    """
    _require_valid(x)
    cells = list(range(x.n_top)) if cells is None else sorted(set(cells))
    kernel = x.cycle_basis_below
    images = x.columns(cells)
    coords = []
    for j in range(images.ncols):
        sol = solve(kernel, images.col(j))
        if not all(isinstance(v, int) for v in sol):
            raise ArithmeticError("boundary image not integral in the cycle basis")
        coords.append(sol)
    m = ExactMatrix.from_columns(coords, kernel.ncols)
    return smith_normal_form(m).torsion_order


def _forest_cells(x: CWComplex, v0: Iterable[int]) -> tuple[int, ...]:
    v0 = tuple(sorted(set(v0)))
    if not is_spanning_forest(x, v0):
        raise NotSpanningForest(f"{list(v0)} is not a spanning forest")
    return v0


@dataclass
class GeometricMesh:
    forest: tuple[int, ...]
    cotree: tuple[int, ...]
    d_chains: list[dict[int, Fraction]]  # D(e) in the forest cells, per cotree cell
    reduced: ExactMatrix  # <D(e), D(f)>

    @property
    def mesh(self) -> ExactMatrix:
        return ExactMatrix.identity(len(self.cotree)) + self.reduced

    def cycle(self, j: int, n_top: int) -> list:
        """z(e_j) = e_j - D(e_j) as a dense vector over the top cells."""
        vec = [0] * n_top
        vec[self.cotree[j]] = 1
        for c, v in self.d_chains[j].items():
            vec[c] -= v
        return vec


def geometric_mesh(x: CWComplex, v0: Iterable[int]) -> GeometricMesh:
    """Gram matrix of the cycles z(e) = e - D(e), with D(e) the unique chain on V0 sharing e's boundary."""
    _require_valid(x)
    v0 = _forest_cells(x, v0)
    cotree = tuple(c for c in range(x.n_top) if c not in v0)
    base = x.columns(v0)
    chains = []
    for e in cotree:
        coeffs = solve(base, x.top.col(e))
        chains.append({c: v for c, v in zip(v0, coeffs) if v})
    reduced = ExactMatrix(
        [[sum(v * b.get(c, 0) for c, v in a.items()) for b in chains] for a in chains],
        ncols=len(chains),
    )
    gm = GeometricMesh(v0, cotree, chains, reduced)
    # Cross-check against the Gram matrix of the explicit cycles.
    cycles = [gm.cycle(j, x.n_top) for j in range(len(cotree))]
    gram = ExactMatrix([[sum(p * q for p, q in zip(a, b)) for b in cycles] for a in cycles], ncols=len(cycles))
    if gram != gm.mesh:
        raise ArithmeticError("geometric mesh differs from the Gram matrix of its cycles")
    return gm


class _TorsionCache:
    def __init__(self, x: CWComplex):
        self.x = x
        self._cache: dict[tuple, int] = {}

    def __call__(self, cells) -> int:
        key = tuple(sorted(cells))
        if key not in self._cache:
            self._cache[key] = torsion_order(self.x, key)
        return self._cache[key]


def _frac(v) -> str | int:
    v = Fraction(v)
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass
class StarReport:
    det_mesh: Fraction
    forest_sum: Fraction
    torsions: dict

    @property
    def ok(self) -> bool:
        return self.det_mesh == self.forest_sum

    def to_dict(self) -> dict:
        return {
            "det_geometric_mesh": _frac(self.det_mesh),
            "forest_sum": _frac(self.forest_sum),
            "torsions": {",".join(map(str, k)): v for k, v in self.torsions.items()},
            "star": self.ok,
        }


def verify_star(x: CWComplex, v0: Iterable[int]) -> StarReport:
    """det of the geometric mesh against the sum over forests of (t(X_V) / t(X_V0))^2."""
    v0 = _forest_cells(x, v0)
    gm = geometric_mesh(x, v0)
    tors = _TorsionCache(x)
    t0 = tors(v0)
    forests = enumerate_spanning_forests(x)
    total = sum((Fraction(tors(v), t0) ** 2 for v in forests), Fraction(0))
    return StarReport(Fraction(det(gm.mesh)), total, {v: tors(v) for v in forests})


@dataclass
class HigherReport:
    charpoly_mesh: Polynomial
    charpoly_reduced: Polynomial
    shift_relation: bool
    c_from_charpoly: list
    c_forest_sums: list
    sigma_from_charpoly: list
    sigma_double_sums: list

    @property
    def ok(self) -> bool:
        return (
            self.shift_relation
            and self.c_from_charpoly == self.c_forest_sums
            and self.sigma_from_charpoly == self.sigma_double_sums
        )

    def to_dict(self) -> dict:
        return {
            "charpoly_mesh": self.charpoly_mesh.to_json(),
            "charpoly_reduced": self.charpoly_reduced.to_json(),
            "shift_relation": self.shift_relation,
            "c": [_frac(v) for v in self.c_from_charpoly],
            "c_forest_sums": [_frac(v) for v in self.c_forest_sums],
            "sigma": [_frac(v) for v in self.sigma_from_charpoly],
            "sigma_double_sums": [_frac(v) for v in self.sigma_double_sums],
            "higher": self.ok,
        }


def verify_theorem_higher(x: CWComplex, v0: Iterable[int]) -> HigherReport:
    """Coefficients of the geometric mesh characteristic polynomials as torsion-weighted forest sums.

    c_j (reduced mesh) sums (t(X_U)/t(X_V0))^2 over forests U meeting the
    cotree cells in j cells.  sigma_j (full mesh) sums the same weights
    over every j-subset U of cotree cells and every forest inside V0 ∪ U.
    """
    v0 = _forest_cells(x, v0)
    gm = geometric_mesh(x, v0)
    n = len(gm.cotree)
    cp_mesh = char_poly_exact(gm.mesh)
    cp_red = char_poly_exact(gm.reduced)
    tors = _TorsionCache(x)
    t0 = tors(v0)
    forests = enumerate_spanning_forests(x)
    weight = {v: Fraction(tors(v), t0) ** 2 for v in forests}
    cotree = set(gm.cotree)

    c_sums = [Fraction(0)] * (n + 1)
    for v, wt in weight.items():
        c_sums[len(cotree.intersection(v))] += wt
    sigma = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        for u in combinations(gm.cotree, j):
            allowed = set(v0) | set(u)
            sigma[j] += sum((wt for v, wt in weight.items() if allowed.issuperset(v)), Fraction(0))

    def signed(p: Polynomial) -> list:
        return [Fraction((-1) ** j * p.coeff(n - j)) for j in range(n + 1)]

    return HigherReport(
        charpoly_mesh=cp_mesh,
        charpoly_reduced=cp_red,
        shift_relation=cp_mesh.shift(1) == cp_red,
        c_from_charpoly=signed(cp_red),
        c_forest_sums=c_sums,
        sigma_from_charpoly=signed(cp_mesh),
        sigma_double_sums=sigma,
    )


@dataclass
class IntegralReport:
    kernel_basis: ExactMatrix
    det_integral: int
    det_geometric: Fraction
    forest_sum: Fraction
    ratio: Fraction
    expected_ratio: Fraction

    @property
    def ok(self) -> bool:
        return self.det_integral == self.forest_sum and self.ratio == self.expected_ratio

    def to_dict(self) -> dict:
        return {
            "kernel_basis": self.kernel_basis.tolist(),
            "det_integral_mesh": self.det_integral,
            "det_geometric_mesh": _frac(self.det_geometric),
            "forest_sum": _frac(self.forest_sum),
            "ratio": _frac(self.ratio),
            "expected_ratio": _frac(self.expected_ratio),
            "integral": self.ok,
        }


def integral_mesh_ratio(x: CWComplex, v0: Iterable[int]) -> IntegralReport:
    """Gram determinant of an integral cycle basis against the geometric one."""
    v0 = _forest_cells(x, v0)
    kernel = integer_kernel_basis(x.top)
    gram = kernel.T @ kernel
    d_int = det(gram)
    gm = geometric_mesh(x, v0)
    d_geo = Fraction(det(gm.mesh))
    tors = _TorsionCache(x)
    t_full = tors(range(x.n_top))
    forests = enumerate_spanning_forests(x)
    total = sum((Fraction(tors(v), t_full) ** 2 for v in forests), Fraction(0))
    return IntegralReport(
        kernel_basis=kernel,
        det_integral=d_int,
        det_geometric=d_geo,
        forest_sum=total,
        ratio=Fraction(d_int) / d_geo,
        expected_ratio=Fraction(tors(v0), t_full) ** 2,
    )


def parse_complex(text: str) -> CWComplex:
    """Parse ``dim <d>`` then, per k = 1..d, ``boundary <k> <rows> <cols>`` and its rows."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    if not lines or not lines[0].startswith("dim"):
        raise ParseError("complex file must start with 'dim <d>'")
    try:
        d = int(lines[0].split()[1])
        pos = 1
        mats = []
        for k in range(1, d + 1):
            head = lines[pos].split()
            if head[0] != "boundary" or int(head[1]) != k:
                raise ParseError(f"expected 'boundary {k} <rows> <cols>', got {lines[pos]!r}")
            rows, cols = int(head[2]), int(head[3])
            body = [list(map(int, lines[pos + 1 + i].split())) for i in range(rows)]
            if any(len(r) != cols for r in body):
                raise ParseError(f"boundary {k}: expected {cols} entries per row")
            mats.append(ExactMatrix(body, ncols=cols))
            pos += 1 + rows
        if pos != len(lines):
            raise ParseError("trailing content after the last boundary block")
        x = CWComplex(tuple(mats))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed complex file: {exc}") from None
    if not validate_complex(x):
        raise InvalidComplex("boundary of a boundary is nonzero")
    return x


def format_complex(x: CWComplex) -> str:
    out = [f"dim {x.dimension}"]
    for k, b in enumerate(x.boundaries, 1):
        out.append(f"boundary {k} {b.nrows} {b.ncols}")
        out += [" ".join(map(str, r)) for r in b.rows()]
    return "\n".join(out) + "\n"
