"""Shared strategies and brute-force oracles for the property suites."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from psskit import QVec, VecSet
from psskit.ratlin import kernel_basis

small_rats = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4
)
positive_rats = st.fractions(
    min_value=Fraction(1, 4), max_value=Fraction(4), max_denominator=4
)


def qvecs(dim: int):
    return (
        st.tuples(*([small_rats] * dim))
        .filter(lambda t: any(c != 0 for c in t))
        .map(QVec)
    )


@st.composite
def vecsets(draw, min_dim=1, max_dim=3, min_size=1, max_size=6):
    d = draw(st.integers(min_dim, max_dim))
    size = draw(st.integers(min_size, max_size))
    vectors = draw(
        st.lists(qvecs(d), min_size=size, max_size=size, unique_by=lambda v: v.entries)
    )
    return VecSet(d, vectors)


@st.composite
def invertible_maps(draw, d):
    """Random unimodular-ish rational matrix: product of elementary ops."""
    rows = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for _ in range(draw(st.integers(1, 4))):
        i = draw(st.integers(0, d - 1))
        j = draw(st.integers(0, d - 1))
        c = draw(small_rats)
        if i == j:
            continue
        for k in range(d):
            rows[i][k] += c * rows[j][k]
    scale_axis = draw(st.integers(0, d - 1))
    scale = draw(positive_rats)
    for k in range(d):
        rows[scale_axis][k] *= scale
    return rows


def apply_map(rows, v: QVec) -> QVec:
    return QVec(
        sum((rows[i][k] * v[k] for k in range(len(v))), Fraction(0))
        for i in range(len(rows))
    )


# ----------------------------------------------------------------------
# independent oracles


def oracle_rank(columns) -> int:
    """Rank as the largest size of a subset with nonzero minor/kernel-free.

    Independent of the production elimination: checks subsets by testing
    that the homogeneous system over the subset has only the zero solution
    (via a kernel computation on a transposed staircase built by hand).
    """
    cols = [list(c) for c in columns]
    n = len(cols)
    best = 0
    for k in range(1, n + 1):
        hit = False
        for sub in combinations(range(n), k):
            if _independent(cols, sub):
                hit = True
                break
        if hit:
            best = k
        else:
            break
    return best


def _independent(cols, sub) -> bool:
    chosen = [list(cols[j]) for j in sub]
    m = len(chosen[0])
    # forward elimination without normalisation
    work = [row[:] for row in chosen]
    used_rows: set[int] = set()
    for vec in work:
        pivot = next(
            (i for i in range(m) if i not in used_rows and vec[i] != 0), None
        )
        if pivot is None:
            return False
        used_rows.add(pivot)
        for other in work:
            if other is not vec and other[pivot] != 0:
                f = other[pivot] / vec[pivot]
                for i in range(m):
                    other[i] -= f * vec[i]
    return True


def brute_force_nonneg_zero_combo(X: VecSet) -> bool:
    """Whether some nonempty subset carries a strictly positive dependency."""
    n = len(X)
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            kern = kernel_basis(X.matrix(sub))
            if len(kern) != 1:
                continue
            v = list(kern[0])
            if all(c > 0 for c in v) or all(c < 0 for c in v):
                return True
    return False


def brute_force_membership(p: QVec, X: VecSet, support_limit=None) -> bool:
    """Membership of p in the positive span, by support enumeration.

    Tries every support of size at most ``support_limit`` (default: rank),
    solving the square-ish system exactly; independent of the LP used in
    production code.
    """
    from psskit.ratlin import solve_linear

    if p.is_zero():
        return True
    limit = X.rank() if support_limit is None else support_limit
    n = len(X)
    for k in range(1, limit + 1):
        for sub in combinations(range(n), k):
            sol = solve_linear(X.columns(sub), list(p))
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


@pytest.fixture
def x9_columns():
    from psskit import example_x9

    X = example_x9()
    return [list(v) for v in X]
