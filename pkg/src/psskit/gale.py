"""Dependency spaces, nonnegative dependency bases and Gale diagrams.

A *dependency* of a vector set is a coefficient function whose weighted
sum of the vectors is zero.  For positively spanning sets the nonnegative
dependencies linearly span the whole dependency space, so a nonnegative
basis exists; it is constructed by the repair loop below.  Evaluating a
dependency basis at each vector and normalising on the L1 sphere gives
the Gale diagram, whose point classes match simplex-membership classes
exactly on locally equilibrated sets.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, PropertyViolation
from .ratlin import QVec, column_rank, kernel_basis
from .simplicial import Simplex, enumerate_simplices
from .spanset import VecSet, is_pss

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Dependency:
    """A coefficient function on a vector set summing the vectors to zero."""

    coeffs: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)


@dataclass(frozen=True)
class GaleDiagram:
    """L1-normalised evaluations of a dependency basis at each vector."""

    basis_used: tuple[Dependency, ...]
    points: tuple[QVec, ...]


def _check_dependency(X: VecSet, v) -> None:
    acc = QVec.zero(X.dim)
    for i in X.indices():
        acc = acc + X[i].scale(v[i])
    if not acc.is_zero():
        raise PropertyViolation("coefficients do not form a dependency")


def dependency_basis(X: VecSet) -> list[Dependency]:
    """Canonical basis of the space of dependencies (may be empty)."""
    if len(X) == 0:
        return []
    out = [Dependency(tuple(k)) for k in kernel_basis(X.matrix())]
    for v in out:
        _check_dependency(X, v)
    return out


def simplex_dependency(X: VecSet, s: Simplex) -> Dependency:
    """The strictly positive dependency of one simplex, zero elsewhere."""
    coeffs = [_ZERO] * len(X)
    for i, c in s.dependency.items():
        coeffs[i] = c
    return Dependency(tuple(coeffs))


def nonneg_dependency_basis(X: VecSet) -> list[Dependency]:
    """A basis of the dependency space with nonnegative coefficients.

    Requires X to positively span its hull.  Each kernel-basis vector is
    repaired: while it has a negative entry, the lowest-index negative
    entry is cancelled by adding the dependency of a simplex through that
    element, scaled to zero it out.  Entries never decrease, so repairs
    terminate.  Repaired vectors are then completed to an independent
    spanning family, drawing on the simplex dependencies when needed
    (the repaired vectors alone can be linearly dependent).
    """
    if not is_pss(X):
        raise PreconditionError("set does not positively span its hull")
    simplices = enumerate_simplices(X)
    by_member: dict[int, Simplex] = {}
    for s in simplices:
        for i in s.members:
            by_member.setdefault(i, s)
    target = len(X) - X.rank()

    repaired: list[list[Fraction]] = []
    for dep in dependency_basis(X):
        v = list(dep.coeffs)
        while True:
            k = next((i for i, c in enumerate(v) if c < 0), None)
            if k is None:
                break
            s = by_member.get(k)
            if s is None:
                raise PropertyViolation("element of a spanning set in no simplex")
            scale = -v[k] / s.dependency[k]
            for i, c in s.dependency.items():
                v[i] += scale * c
            assert v[k] == 0
        repaired.append(v)

    chosen: list[list[Fraction]] = []
    pool = repaired + [list(simplex_dependency(X, s).coeffs) for s in simplices]
    for cand in pool:
        if len(chosen) == target:
            break
        if column_rank(chosen + [cand]) == len(chosen) + 1:
            chosen.append(cand)
    if len(chosen) != target:
        raise PropertyViolation("nonnegative dependencies failed to span")
    out = [Dependency(tuple(v)) for v in chosen]
    for v in out:
        _check_dependency(X, v)
        if not v.is_nonnegative():
            raise PropertyViolation("repair loop left a negative entry")
    return out


def is_locally_equilibrated(X: VecSet) -> bool:
    """Whether the members of every simplex sum exactly to zero."""
    for s in enumerate_simplices(X):
        acc = QVec.zero(X.dim)
        for i in s.members:
            acc = acc + X[i]
        if not acc.is_zero():
            return False
    return True


def gale_diagram(X: VecSet, basis: list[Dependency]) -> GaleDiagram:
    """Evaluate a dependency basis at each vector, normalised on the L1 sphere.

    The L1 sphere keeps every coordinate rational.  A zero evaluation stays
    zero.  The basis must actually be a basis of the dependency space.
    """
    n = len(basis)
    if n != len(X) - X.rank():
        raise PreconditionError("basis does not span the dependency space")
    for v in basis:
        if len(v) != len(X):
            raise PreconditionError("dependency length mismatch")
        _check_dependency(X, v)
    if n and column_rank([list(v.coeffs) for v in basis]) != n:
        raise PreconditionError("basis is linearly dependent")
    points = []
    for i in X.indices():
        w = [v[i] for v in basis]
        norm = sum((abs(c) for c in w), _ZERO)
        if norm == 0:
            points.append(QVec.zero(n))
        else:
            points.append(QVec(c / norm for c in w))
    return GaleDiagram(tuple(basis), tuple(points))


def characteristic_basis(X: VecSet) -> list[Dependency]:
    """A dependency basis of simplex indicator functions.

    Exists whenever X positively spans its hull and is locally
    equilibrated; chosen greedily over the canonical simplex order.
    """
    if not is_pss(X):
        raise PreconditionError("set does not positively span its hull")
    if not is_locally_equilibrated(X):
        raise PreconditionError("set is not locally equilibrated")
    target = len(X) - X.rank()
    chosen: list[list[Fraction]] = []
    deps: list[Dependency] = []
    for s in enumerate_simplices(X):
        if len(chosen) == target:
            break
        indicator = [_ONE if i in s.dependency else _ZERO for i in X.indices()]
        if column_rank(chosen + [indicator]) == len(chosen) + 1:
            chosen.append(indicator)
            deps.append(Dependency(tuple(indicator)))
    if len(chosen) != target:
        raise PropertyViolation("indicator functions failed to span")
    for v in deps:
        _check_dependency(X, v)
    return deps


@dataclass(frozen=True)
class GaleReport:
    """Pairwise comparison of Gale points against simplex memberships."""

    ok: bool
    violations: tuple[tuple[int, int], ...]
    point_classes: tuple[tuple[int, ...], ...]


def verify_gale_theorem(X: VecSet) -> GaleReport:
    """Check Gale-point equality equals simplex-membership equality.

    Requires a locally equilibrated positively spanning set; the diagram
    is built over an indicator-function basis.  Reports every violating
    pair (there are none when the implementation is sound) and the
    partition of indices into point classes.
    """
    basis = characteristic_basis(X)  # enforces both preconditions
    diagram = gale_diagram(X, basis)
    simplices = enumerate_simplices(X)
    membership = [
        frozenset(k for k, s in enumerate(simplices) if i in s.dependency)
        for i in X.indices()
    ]
    violations = []
    for i in X.indices():
        for j in range(i + 1, len(X)):
            same_point = diagram.points[i] == diagram.points[j]
            same_membership = membership[i] == membership[j]
            if same_point != same_membership:
                violations.append((i, j))
    classes: dict[QVec, list[int]] = {}
    for i in X.indices():
        classes.setdefault(diagram.points[i], []).append(i)
    ordered = tuple(tuple(v) for _, v in sorted(classes.items(), key=lambda kv: kv[1]))
    return GaleReport(not violations, tuple(violations), ordered)
