"""Bar-invariant canonical basis and the q-decomposition matrix.

Each basis vector G(lam) is the unique bar-invariant vector congruent to
|lam> modulo the q-lattice.  It is found by a triangular solve along any
linear extension of dominance (largest first): walking down from lam, the
residual at each mu is bar-antisymmetric and admits a unique lift into
q.Z[q].  A final correction loop subtracts bar-symmetric multiples of
lower basis vectors from any remaining lattice violation; with the solve
above it has nothing to do, but it repairs arbitrary bar-invariant seeds
and converts non-termination into a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fockdec.errors import ConventionError, StepBudgetExceeded
from fockdec.fock import BarMatrix, FockVector, bar_matrix
from fockdec.laurent import LaurentPoly
from fockdec.matrices import PartitionMatrix
from fockdec.partitions import (
    Partition,
    check_partition,
    dominated_by,
    format_partition,
    partitions_of,
)


def symmetric_lift(c: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant p congruent to c modulo q.Z[q].

    Writing c = sum a_j q^j:  p = a_0 + sum_{j>0} a_{-j} (q^j + q^{-j}).
    """
    table: dict[int, int] = {}
    for e, coeff in c.items():
        if e == 0:
            table[0] = table.get(0, 0) + coeff
        elif e < 0:
            table[e] = table.get(e, 0) + coeff
            table[-e] = table.get(-e, 0) + coeff
    return LaurentPoly(table)


def _antisymmetric_lift(r: LaurentPoly) -> LaurentPoly:
    """Unique x in q.Z[q] with x - bar(x) = r, for bar-antisymmetric r."""
    if not r.is_bar_antisymmetric():
        raise ConventionError(
            f"residual {r} is not antisymmetric under q -> q^-1; "
            "the bar involution convention is broken upstream"
        )
    return LaurentPoly({e: c for e, c in r.items() if e > 0})


class DecompositionMatrix(PartitionMatrix):
    """Columns are canonical basis vectors expanded in the partition basis."""

    kind = "decomposition"

    def validate(self) -> None:
        for mu in self.order:
            for lam in self.order:
                entry = self.entry(mu, lam)
                if mu == lam:
                    if not entry.is_one():
                        raise AssertionError(f"diagonal entry at {mu} is {entry}")
                    continue
                if entry.is_zero():
                    continue
                if not dominated_by(mu, lam):
                    raise AssertionError(
                        f"nonzero entry at non-dominated pair {mu}, {lam}"
                    )
                if not entry.is_q_multiple():
                    raise AssertionError(
                        f"off-diagonal entry at {mu}, {lam} not in q.Z[q]: {entry}"
                    )


def _solve_column(
    lam: Partition,
    amat: BarMatrix,
    order: tuple[Partition, ...],
) -> dict[Partition, LaurentPoly]:
    """Triangular solve for the bar-invariant column congruent to |lam>."""
    start = order.index(lam)
    column: dict[Partition, LaurentPoly] = {lam: LaurentPoly.one()}
    for mu in order[start + 1 :]:
        residual = LaurentPoly.zero()
        for tau, x in column.items():
            a = amat.entry(mu, tau)
            if not a.is_zero():
                residual = residual + a * x.bar()
        if residual.is_zero():
            continue
        column[mu] = _antisymmetric_lift(residual)
    return {mu: x for mu, x in column.items() if not x.is_zero()}


def _correct_to_lattice(
    lam: Partition,
    column: dict[Partition, LaurentPoly],
    basis: dict[Partition, dict[Partition, LaurentPoly]],
    order: tuple[Partition, ...],
    budget: int,
) -> dict[Partition, LaurentPoly]:
    """Subtract symmetric lifts of violating coefficients against lower columns."""
    column = dict(column)
    for _ in range(budget):
        violating = None
        for mu in order:
            if mu == lam:
                continue
            coeff = column.get(mu)
            if coeff is not None and not coeff.is_q_multiple():
                violating = mu
                break
        if violating is None:
            return {mu: c for mu, c in column.items() if not c.is_zero()}
        lift = symmetric_lift(column[violating])
        for tau, g in basis[violating].items():
            column[tau] = column.get(tau, LaurentPoly.zero()) - lift * g
    raise StepBudgetExceeded(
        f"lattice correction for {lam} did not settle within {budget} steps"
    )


def decomposition_matrix(
    n: int,
    m: int,
    amat: BarMatrix | None = None,
    order: tuple[Partition, ...] | None = None,
) -> DecompositionMatrix:
    """The q-decomposition matrix on degree m at modulus n.

    `order` may be any linear extension of dominance with larger partitions
    first; the resulting matrix is independent of the choice.
    """
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    if m < 0:
        raise ValueError("degree m must be >= 0")
    if amat is None:
        amat = bar_matrix(n, m)
    if order is None:
        order = partitions_of(m)
    else:
        order = tuple(tuple(lam) for lam in order)
        if sorted(order) != sorted(partitions_of(m)):
            raise ValueError("order must enumerate all partitions of m")
    budget = max(len(order) ** 2, 4)
    columns: dict[Partition, dict[Partition, LaurentPoly]] = {}
    for lam in reversed(order):
        column = _solve_column(lam, amat, order)
        columns[lam] = _correct_to_lattice(lam, column, columns, order, budget)

    canonical_order = partitions_of(m)
    index = {lam: i for i, lam in enumerate(canonical_order)}
    rows = [[LaurentPoly.zero()] * len(canonical_order) for _ in canonical_order]
    for lam, column in columns.items():
        for mu, coeff in column.items():
            rows[index[mu]][index[lam]] = coeff
    matrix = DecompositionMatrix(n=n, m=m, order=canonical_order, rows=rows)
    matrix.validate()
    return matrix


def canonical_vector(lam: Partition, n: int, amat: BarMatrix | None = None) -> FockVector:
    """The canonical basis vector G(lam)."""
    lam = check_partition(lam)
    dmat = decomposition_matrix(n, sum(lam), amat=amat)
    return FockVector(dmat.column(lam))


@dataclass
class IdentityReport:
    """Outcome of an entrywise matrix identity check."""

    name: str
    n: int
    m: int
    passed: bool
    failures: list[tuple[Partition, Partition, str, str]] = field(default_factory=list)

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: PASS (n={self.n}, m={self.m})"
        lines = [f"{self.name}: FAIL (n={self.n}, m={self.m})"]
        for lam, mu, lhs, rhs in self.failures:
            lines.append(
                f"  ({format_partition(lam)}, {format_partition(mu)}): "
                f"lhs={lhs} rhs={rhs}"
            )
        return "\n".join(lines)


def gj_identity_check(
    n: int,
    m: int,
    amat: BarMatrix | None = None,
    dmat: DecompositionMatrix | None = None,
) -> IdentityReport:
    """Entrywise check of D(q) = A(q) * D(q^-1)."""
    if amat is None:
        amat = bar_matrix(n, m)
    if dmat is None:
        dmat = decomposition_matrix(n, m, amat=amat)
    report = IdentityReport(name="bar-triangle identity", n=n, m=m, passed=True)
    order = dmat.order
    for lam in order:
        for mu in order:
            rhs = LaurentPoly.zero()
            for tau in order:
                a = amat.entry(lam, tau)
                if a.is_zero():
                    continue
                d = dmat.entry(tau, mu)
                if d.is_zero():
                    continue
                rhs = rhs + a * d.bar()
            lhs = dmat.entry(lam, mu)
            if lhs != rhs:
                report.passed = False
                report.failures.append((lam, mu, str(lhs), str(rhs)))
    return report


def derivative_identity_check(
    n: int,
    m: int,
    amat: BarMatrix | None = None,
    dmat: DecompositionMatrix | None = None,
) -> IdentityReport:
    """Integer check of d'(1) = (1/2) A'(1) D(1), entrywise."""
    if amat is None:
        amat = bar_matrix(n, m)
    if dmat is None:
        dmat = decomposition_matrix(n, m, amat=amat)
    report = IdentityReport(name="derivative identity", n=n, m=m, passed=True)
    order = dmat.order
    for lam in order:
        for mu in order:
            total = 0
            for tau in order:
                a_prime = amat.entry(lam, tau).derivative_at_one()
                if a_prime == 0:
                    continue
                total += a_prime * dmat.entry(tau, mu).eval_at_one()
            if total % 2 != 0:
                raise ConventionError(
                    f"odd derivative sum {total} at ({lam}, {mu}), n={n}"
                )
            lhs = dmat.entry(lam, mu).derivative_at_one()
            if lhs != total // 2:
                report.passed = False
                report.failures.append((lam, mu, str(lhs), str(total // 2)))
    return report


def alternative_order(m: int) -> tuple[Partition, ...]:
    """A second linear extension of dominance: ascending lex on conjugates."""
    from fockdec.partitions import conjugate

    return tuple(sorted(partitions_of(m), key=conjugate))
