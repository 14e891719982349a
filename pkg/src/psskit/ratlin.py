"""Exact rational linear algebra and linear-feasibility decisions.

Everything here works over ``fractions.Fraction``; there is no floating
point anywhere, so every predicate built on top of this module is an exact
dichotomy.  Feasibility questions are decided by a phase-I simplex method
with Bland's anti-cycling rule, which makes every answer deterministic and
returns an explicit certificate that can be re-checked by multiplication.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, ZeroVectorError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _to_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class QVec:
    """Immutable rational vector."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(_to_rat(e) for e in entries))

    @classmethod
    def zero(cls, dim: int) -> "QVec":
        return cls((_ZERO,) * dim)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k: int) -> Fraction:
        return self.entries[k]

    def __add__(self, other: "QVec") -> "QVec":
        return QVec(a + b for a, b in zip(self.entries, other.entries, strict=True))

    def __sub__(self, other: "QVec") -> "QVec":
        return QVec(a - b for a, b in zip(self.entries, other.entries, strict=True))

    def __neg__(self) -> "QVec":
        return QVec(-a for a in self.entries)

    def scale(self, c) -> "QVec":
        c = _to_rat(c)
        return QVec(c * a for a in self.entries)

    def dot(self, other: "QVec") -> Fraction:
        return sum(
            (a * b for a, b in zip(self.entries, other.entries, strict=True)), _ZERO
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __repr__(self) -> str:
        return "QVec(" + ", ".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class QMat:
    """Immutable rational matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_to_rat(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "QMat":
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(m, n, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns) -> "QMat":
        columns = [list(c) for c in columns]
        n = len(columns)
        m = len(columns[0]) if columns else 0
        if any(len(c) != m for c in columns):
            raise DimensionMismatchError("ragged columns")
        return cls(m, n, [columns[j][i] for i in range(m) for j in range(n)])

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j: int) -> list[Fraction]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def row_lists(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def column_lists(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]


@dataclass(frozen=True)
class FeasWitness:
    """Outcome of a feasibility question, with a re-checkable certificate.

    Exactly one payload is present:

    * ``coefficients`` -- a nonnegative solution, as a map column index -> Rat
    * ``separator``    -- a vector z with z.x >= 1 for every input vector
    * neither          -- the instance is infeasible
    """

    kind: str  # "coefficients" | "separator" | "infeasible"
    coeffs: dict[int, Fraction] | None = None
    separator: QVec | None = None

    def __post_init__(self):
        payloads = (self.coeffs is not None, self.separator is not None)
        expected = {
            "coefficients": (True, False),
            "separator": (False, True),
            "infeasible": (False, False),
        }
        if self.kind not in expected or payloads != expected[self.kind]:
            raise ValueError(f"inconsistent witness: kind={self.kind!r}")

    @classmethod
    def coefficients(cls, coeffs: dict[int, Fraction]) -> "FeasWitness":
        return cls("coefficients", coeffs=dict(coeffs))

    @classmethod
    def of_separator(cls, z: QVec) -> "FeasWitness":
        return cls("separator", separator=z)

    @classmethod
    def infeasible(cls) -> "FeasWitness":
        return cls("infeasible")

    @property
    def feasible(self) -> bool:
        return self.kind != "infeasible"


# ----------------------------------------------------------------------
# Gaussian elimination


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    pr = 0
    for c in range(n):
        hit = next((i for i in range(pr, m) if rows[i][c] != 0), None)
        if hit is None:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        pv = rows[pr][c]
        if pv != 1:
            rows[pr] = [v / pv for v in rows[pr]]
        for i in range(m):
            if i != pr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
        if pr == m:
            break
    return rows, pivots


def rank(M: QMat) -> int:
    """Exact rank over the rationals."""
    return len(_rref(M.row_lists())[1])


def column_rank(columns) -> int:
    """Rank of a list of equal-length column vectors (no QMat required)."""
    columns = [list(c) for c in columns]
    if not columns:
        return 0
    rows = [[c[i] for c in columns] for i in range(len(columns[0]))]
    return len(_rref(rows)[1])


def kernel_basis(M: QMat) -> list[QVec]:
    """Basis of the right kernel {v : Mv = 0}.

    Each basis vector is scaled so that its first nonzero entry equals 1,
    and the vectors are ordered by their free column, so the output is a
    canonical function of the input.
    """
    R, pivots = _rref(M.row_lists())
    free = [j for j in range(M.cols) if j not in pivots]
    out = []
    for f in free:
        v = [_ZERO] * M.cols
        v[f] = _ONE
        for ri, pc in enumerate(pivots):
            v[pc] = -R[ri][f]
        first = next(x for x in v if x != 0)
        if first != 1:
            v = [x / first for x in v]
        out.append(QVec(v))
    return out


def solve_linear(columns, rhs) -> list[Fraction] | None:
    """One exact solution of ``sum_j x_j columns[j] = rhs`` or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    columns = [list(c) for c in columns]
    rhs = list(rhs)
    m = len(rhs)
    n = len(columns)
    rows = [[columns[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]
    R, pivots = _rref(rows)
    if n in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [_ZERO] * n
    for ri, pc in enumerate(pivots):
        x[pc] = R[ri][n]
    return x


# ----------------------------------------------------------------------
# Phase-I simplex


def _phase_one(columns: list[list[Fraction]], rhs: list[Fraction]):
    """Find x >= 0 with ``sum_j x_j columns[j] = rhs``, else None.

    Phase-I simplex over exact rationals.  Bland's rule: the entering
    variable is the lowest-index negative reduced cost, the leaving row is
    the minimum ratio with ties broken by lowest basic-variable index.
    """
    m = len(rhs)
    n = len(columns)
    width = n + m + 1
    T: list[list[Fraction]] = []
    for i in range(m):
        coef = [columns[j][i] for j in range(n)]
        bi = rhs[i]
        if bi < 0:
            coef = [-a for a in coef]
            bi = -bi
        row = coef + [_ZERO] * m + [bi]
        row[n + i] = _ONE
        T.append(row)
    basis = list(range(n, n + m))
    # reduced costs for the phase-I objective (sum of artificials)
    r = [_ZERO] * (n + m)
    for j in range(n):
        r[j] = -sum((T[i][j] for i in range(m)), _ZERO)

    while True:
        enter = next((j for j in range(n + m) if r[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:  # objective is bounded below by 0, cannot happen
            raise RuntimeError("phase-I simplex detected unboundedness")
        piv = T[leave][enter]
        if piv != 1:
            T[leave] = [v / piv for v in T[leave]]
        prow = T[leave]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], prow)]
        if r[enter] != 0:
            f = r[enter]
            for j in range(n + m):
                r[j] -= f * prow[j]
        basis[leave] = enter

    objective = sum((T[i][-1] for i in range(m) if basis[i] >= n), _ZERO)
    if objective != 0:
        return None
    x = [_ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    return x


def solve_nonneg(A: QMat, b: QVec) -> FeasWitness:
    """Decide whether ``b`` is a nonnegative combination of A's columns.

    Returns a ``coefficients`` witness (exact, re-checkable) when feasible
    and ``infeasible`` otherwise.  Deterministic for identical inputs.
    """
    if b.dim != A.rows:
        raise DimensionMismatchError(
            f"matrix has {A.rows} rows but rhs has dimension {b.dim}"
        )
    x = _phase_one(A.column_lists(), list(b))
    if x is None:
        return FeasWitness.infeasible()
    for i in range(A.rows):
        acc = sum((x[j] * A.entries[i * A.cols + j] for j in range(A.cols)), _ZERO)
        if acc != b[i]:
            raise RuntimeError("simplex returned an invalid certificate")
    return FeasWitness.coefficients({j: x[j] for j in range(A.cols)})


def strict_separator(vectors: list[QVec]) -> FeasWitness:
    """Find z with z.x >= 1 for every x, or certify there is none.

    Since the constraint set is a homogeneous cone, z.x >= 1 for all x is
    equivalent to the existence of a vector with z.x > 0 for all x.  The
    search is an exact phase-I feasibility problem in z = u - v, u, v >= 0
    with one surplus variable per input vector.
    """
    vectors = list(vectors)
    for i, x in enumerate(vectors):
        if x.is_zero():
            raise ZeroVectorError("zero vector admits no strict separator", index=i)
    if not vectors:
        return FeasWitness.of_separator(QVec.zero(0))
    d = vectors[0].dim
    m = len(vectors)
    columns: list[list[Fraction]] = []
    for k in range(d):
        columns.append([x[k] for x in vectors])
    for k in range(d):
        columns.append([-x[k] for x in vectors])
    for i in range(m):
        col = [_ZERO] * m
        col[i] = -_ONE
        columns.append(col)
    x = _phase_one(columns, [_ONE] * m)
    if x is None:
        return FeasWitness.infeasible()
    z = QVec(x[k] - x[d + k] for k in range(d))
    for v in vectors:
        if z.dot(v) < 1:
            raise RuntimeError("simplex returned an invalid separator")
    return FeasWitness.of_separator(z)
