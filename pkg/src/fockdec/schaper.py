"""Jantzen sum formula, its canonical-basis prediction, and their comparison.

The sum formula produces, from hook lengths of a partition alone, a virtual
integer combination of Specht classes.  The same combination is predicted by
the derivative of the decomposition matrix at q = 1; `theorem1_check`
verifies the two agree, both in the Specht basis and, via the q = 1
decomposition numbers, in the simple basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from fockdec.canonical import DecompositionMatrix, decomposition_matrix
from fockdec.errors import ConventionError
from fockdec.fock import BarMatrix, bar_matrix
from fockdec.laurent import nu_quantum
from fockdec.partitions import (
    Partition,
    check_partition,
    d_symbol,
    dim_specht,
    first_column_betas,
    format_partition,
    hook_length,
    is_regular,
    partition_from_betas,
)

SPECHT = "specht"
SIMPLE = "simple"


class GrothendieckVector:
    """Integer combination of module classes in a tagged basis."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis: str, coords=None):
        if basis not in (SPECHT, SIMPLE):
            raise ValueError(f"unknown basis tag {basis!r}")
        self.basis = basis
        table: dict[Partition, int] = {}
        if coords:
            for lam, value in coords.items():
                if value:
                    table[tuple(lam)] = value
        self.coords = table

    @classmethod
    def zero(cls, basis: str) -> "GrothendieckVector":
        return cls(basis)

    def is_zero(self) -> bool:
        return not self.coords

    def coeff(self, lam: Partition) -> int:
        return self.coords.get(tuple(lam), 0)

    def _check_same_basis(self, other: "GrothendieckVector") -> None:
        if self.basis != other.basis:
            raise ValueError(
                f"cannot combine {self.basis}-basis and {other.basis}-basis vectors"
            )

    def __add__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        self._check_same_basis(other)
        table = dict(self.coords)
        for lam, value in other.coords.items():
            table[lam] = table.get(lam, 0) + value
        return GrothendieckVector(self.basis, table)

    def __sub__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "GrothendieckVector":
        return GrothendieckVector(
            self.basis, {lam: factor * v for lam, v in self.coords.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, GrothendieckVector)
            and self.basis == other.basis
            and self.coords == other.coords
        )

    def __repr__(self):
        if not self.coords:
            return f"GrothendieckVector({self.basis}, 0)"
        letter = "S" if self.basis == SPECHT else "D"
        bits = " + ".join(
            f"{v}[{letter}({format_partition(lam)})]"
            for lam, v in sorted(self.coords.items(), reverse=True)
        ).replace("+ -", "- ")
        return f"GrothendieckVector({bits})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coords": {format_partition(lam): v for lam, v in sorted(self.coords.items(), reverse=True)},
        }


def simple_vector(coords, n: int) -> GrothendieckVector:
    """A simple-basis vector, validated to be supported on n-regular labels."""
    vector = GrothendieckVector(SIMPLE, coords)
    for lam in vector.coords:
        if not is_regular(lam, n):
            raise ValueError(f"simple-basis support contains {lam}, not {n}-regular")
    return vector


def _sum_formula_terms(lam: Partition, n: int, s: int | None = None):
    """Yield (weight, beta_sequence) terms of the hook-length double sum.

    s defaults to the number of rows; larger s pads the beta-sequence and
    must not change the resulting vector (checked by tests).
    """
    lam = check_partition(lam)
    rows = len(lam)
    if s is None:
        s = rows
    if s < rows:
        raise ValueError(f"s={s} smaller than number of rows of {lam}")
    betas = first_column_betas(lam, s)
    for a in range(1, s + 1):
        for b in range(a, min(s, rows) + 1):
            for c in range(1, lam[b - 1] + 1):
                h_ac = hook_length(lam, a, c)
                h_bc = hook_length(lam, b, c)
                weight = nu_quantum(h_ac, n) - nu_quantum(h_bc, n)
                if weight == 0:
                    continue
                modified = list(betas)
                modified[a - 1] += h_bc
                modified[b - 1] -= h_bc
                yield weight, tuple(modified)


def schaper_sum_rhs(lam: Partition, n: int, s: int | None = None) -> GrothendieckVector:
    """The sum-formula right-hand side as a virtual Specht-basis vector."""
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    coords: dict[Partition, int] = {}
    for weight, betas in _sum_formula_terms(lam, n, s):
        recovered = partition_from_betas(betas)
        if recovered is None:
            continue
        sign, tau = recovered
        coords[tau] = coords.get(tau, 0) + weight * sign
    return GrothendieckVector(SPECHT, coords)


def schaper_det_rhs(lam: Partition, n: int, s: int | None = None) -> int:
    """The Gram-determinant valuation predicted by the same double sum.

    Identical to schaper_sum_rhs with each class replaced by its signed
    generic dimension.
    """
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    return sum(weight * d_symbol(betas) for weight, betas in _sum_formula_terms(lam, n, s))


def dim_weighting(vector: GrothendieckVector) -> int:
    """Pair a Specht-basis vector with generic Specht dimensions."""
    if vector.basis != SPECHT:
        raise ValueError("dimension weighting defined on Specht-basis vectors")
    return sum(value * dim_specht(lam) for lam, value in vector.coords.items())


def jantzen_prediction(
    lam: Partition, n: int, dmat: DecompositionMatrix | None = None
) -> GrothendieckVector:
    """Row lam of the decomposition matrix, differentiated at q = 1.

    Coordinates land on n-regular labels in the simple basis; this is the
    filtration-layer sum the q-exponents encode.
    """
    lam = check_partition(lam)
    if dmat is None:
        dmat = decomposition_matrix(n, sum(lam))
    coords = {}
    for mu in dmat.order:
        if not is_regular(mu, n):
            continue
        value = dmat.entry(lam, mu).derivative_at_one()
        if value:
            coords[mu] = value
    return simple_vector(coords, n)


def gabber_joseph_rhs(
    lam: Partition, n: int, amat: BarMatrix | None = None
) -> GrothendieckVector:
    """Half the derivative at 1 of row lam of the bar matrix, over Specht classes."""
    lam = check_partition(lam)
    if amat is None:
        amat = bar_matrix(n, sum(lam))
    coords = {}
    for tau in amat.order:
        value = amat.entry(lam, tau).derivative_at_one()
        if value == 0:
            continue
        if value % 2 != 0:
            raise ConventionError(
                f"bar matrix derivative at ({lam}, {tau}) is odd: {value}"
            )
        coords[tau] = value // 2
    return GrothendieckVector(SPECHT, coords)


def specht_to_simple(
    vector: GrothendieckVector, n: int, dmat: DecompositionMatrix | None = None
) -> GrothendieckVector:
    """Change of basis via the q = 1 decomposition numbers."""
    if vector.basis != SPECHT:
        raise ValueError("change of basis defined on Specht-basis vectors")
    if dmat is None:
        sizes = {sum(lam) for lam in vector.coords}
        if not sizes:
            return GrothendieckVector(SIMPLE)
        if len(sizes) > 1:
            raise ValueError("mixed degrees in Specht-basis vector")
        dmat = decomposition_matrix(n, sizes.pop())
    coords: dict[Partition, int] = {}
    for tau, value in vector.coords.items():
        for mu in dmat.order:
            if not is_regular(mu, n):
                continue
            d = dmat.entry(tau, mu).eval_at_one()
            if d:
                coords[mu] = coords.get(mu, 0) + value * d
    return simple_vector(coords, n)


@dataclass
class Theorem1Report:
    """Comparison of the sum formula against the canonical-basis prediction."""

    lam: Partition
    n: int
    passed: bool
    sum_formula: GrothendieckVector
    derivative_side: GrothendieckVector
    prediction: GrothendieckVector
    sum_formula_simple: GrothendieckVector
    derivative_simple: GrothendieckVector

    def describe(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"theorem1({format_partition(self.lam) or 'empty'}, n={self.n}): {verdict}"]
        lines.append(f"  sum formula      : {self.sum_formula!r}")
        lines.append(f"  derivative side  : {self.derivative_side!r}")
        if not self.passed:
            lines.append(f"  prediction       : {self.prediction!r}")
            lines.append(f"  sum formula @q=1 : {self.sum_formula_simple!r}")
            lines.append(f"  derivative @q=1  : {self.derivative_simple!r}")
        return "\n".join(lines)


def theorem1_check(
    lam: Partition,
    n: int,
    amat: BarMatrix | None = None,
    dmat: DecompositionMatrix | None = None,
) -> Theorem1Report:
    """Check sum formula == derivative side, and both == prediction at q=1."""
    lam = check_partition(lam)
    m = sum(lam)
    if amat is None:
        amat = bar_matrix(n, m)
    if dmat is None:
        dmat = decomposition_matrix(n, m, amat=amat)
    sum_formula = schaper_sum_rhs(lam, n)
    derivative_side = gabber_joseph_rhs(lam, n, amat)
    prediction = jantzen_prediction(lam, n, dmat)
    sum_simple = specht_to_simple(sum_formula, n, dmat)
    derivative_simple = specht_to_simple(derivative_side, n, dmat)
    passed = (
        sum_formula == derivative_side
        and sum_simple == prediction
        and derivative_simple == prediction
    )
    return Theorem1Report(
        lam=lam,
        n=n,
        passed=passed,
        sum_formula=sum_formula,
        derivative_side=derivative_side,
        prediction=prediction,
        sum_formula_simple=sum_simple,
        derivative_simple=derivative_simple,
    )
