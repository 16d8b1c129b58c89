"""The level-1 q-Fock space: wedge words, normal ordering, bar involution.

A wedge word is encoded by its head (i_1, ..., i_k); the implicit tail
continues with i_j = -j + 1 for j > k.  Normalized heads are strictly
decreasing with all entries exceeding -k, and correspond to partitions via
i_k = lambda_k - k + 1.
"""

from __future__ import annotations

import logging

from fockdec import kernel
from fockdec.laurent import LaurentPoly
from fockdec.matrices import PartitionMatrix
from fockdec.partitions import (
    Partition,
    check_partition,
    format_partition,
    partitions_of,
)

log = logging.getLogger(__name__)


def wedge_from_partition(lam: Partition, k: int) -> tuple[int, ...]:
    """Length-k head of the wedge word of lam: entries lambda_j - j + 1."""
    lam = check_partition(lam)
    if k < len(lam):
        raise ValueError(f"k={k} smaller than number of parts of {lam}")
    return tuple((lam[j - 1] if j <= len(lam) else 0) - j + 1 for j in range(1, k + 1))


def partition_from_wedge(head: tuple[int, ...]) -> Partition:
    """Partition of a normalized head: lambda_j = i_j + j - 1, zeros dropped."""
    k = len(head)
    parts = []
    for j in range(1, k + 1):
        value = head[j - 1] + j - 1
        if value < 0 or head[j - 1] <= -k - 1:
            raise ValueError(f"head {head} is not normalized")
        if j > 1 and head[j - 2] <= head[j - 1]:
            raise ValueError(f"head {head} is not normalized")
        parts.append(value)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def wedge_degree(head: tuple[int, ...]) -> int:
    """Sum of i_j + j - 1 over the head (tail terms contribute zero)."""
    return sum(value + j for j, value in enumerate(head))


def normalize_head(head: tuple[int, ...]) -> tuple[int, ...]:
    """Drop trailing vacuum entries so the head has minimal length."""
    head = tuple(head)
    while head and head[-1] == -len(head) + 1:
        head = head[:-1]
    return head


def betas_from_wedge(head: tuple[int, ...]) -> tuple[int, ...]:
    """The (m+1)-entry beta-sequence (i_1 + m, ..., i_m + m, 0) of a degree-m word."""
    m = wedge_degree(head)
    if m < 0:
        raise ValueError(f"head {head} has negative degree")
    full = list(head) + [-j + 1 for j in range(len(head) + 1, m + 1)]
    return tuple(full[j] + m for j in range(m)) + (0,)


class FockVector:
    """Finite Laurent-combination of partition basis vectors of one degree."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        table: dict[Partition, LaurentPoly] = {}
        if terms:
            for lam, coeff in terms.items():
                if not isinstance(coeff, LaurentPoly):
                    coeff = LaurentPoly({0: coeff}) if coeff else LaurentPoly.zero()
                if not coeff.is_zero():
                    table[tuple(lam)] = coeff
        self.terms = table
        degrees = {sum(lam) for lam in table}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees in Fock vector: {sorted(degrees)}")

    @classmethod
    def basis(cls, lam: Partition) -> "FockVector":
        return cls({check_partition(lam): LaurentPoly.one()})

    def coeff(self, lam: Partition) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockVector") -> "FockVector":
        table = dict(self.terms)
        for lam, coeff in other.terms.items():
            table[lam] = table.get(lam, LaurentPoly.zero()) + coeff
        return FockVector(table)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, factor: LaurentPoly) -> "FockVector":
        return FockVector({lam: coeff * factor for lam, coeff in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FockVector(0)"
        bits = ", ".join(
            f"({str(c)})|{format_partition(lam) or 'empty'}>"
            for lam, c in sorted(self.terms.items(), reverse=True)
        )
        return f"FockVector({bits})"

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "coefficient": str(coeff)}
            for lam, coeff in sorted(self.terms.items(), reverse=True)
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "FockVector":
        from fockdec.laurent import parse_poly

        return cls(
            {tuple(item["partition"]): parse_poly(item["coefficient"]) for item in data}
        )


def straighten(head, n: int, budget: int | None = None) -> FockVector:
    """Normal-order an arbitrary head into a combination of partition wedges.

    Requires n >= 2 and every entry exceeding -len(head), so that rewriting
    never touches the implicit tail.
    """
    head = tuple(head)
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    k = len(head)
    if any(e <= -k for e in head):
        raise ValueError(f"head {head} has entries reaching the implicit tail")
    raw = kernel.straighten_raw(head, n, budget or kernel.DEFAULT_STEP_BUDGET)
    return FockVector(
        {partition_from_wedge(h): LaurentPoly(c) for h, c in raw.items()}
    )


def _alpha_statistic(head: tuple[int, ...], n: int) -> int:
    """Number of pairs r < s with i_r - i_s not divisible by n."""
    count = 0
    for r in range(len(head)):
        for s in range(r + 1, len(head)):
            if (head[r] - head[s]) % n != 0:
                count += 1
    return count


def bar_partition(mu: Partition, n: int, k: int | None = None) -> FockVector:
    """Bar involution of the basis vector of mu.

    Reverses the first k wedge factors, multiplies by the sign (-1)^(k choose 2)
    and by q to the number of non-congruent index pairs, then normal-orders.
    The result is independent of the truncation k (k >= max(|mu|, rows)).
    """
    mu = check_partition(mu)
    m = sum(mu)
    if k is None:
        k = max(m, len(mu))
    if k < m or k < len(mu):
        raise ValueError(f"truncation k={k} too small for {mu}")
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    head = wedge_from_partition(mu, k)
    alpha = _alpha_statistic(head, n)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    prefactor = LaurentPoly({alpha: sign})
    return straighten(head[::-1], n).scale(prefactor)


def bar_vector(v: FockVector, n: int, k: int | None = None) -> FockVector:
    """Semilinear extension of the bar involution: bar coefficients, bar terms."""
    result = FockVector()
    for lam, coeff in v.terms.items():
        result = result + bar_partition(lam, n, k).scale(coeff.bar())
    return result


class BarMatrix(PartitionMatrix):
    """Matrix of bar-involution coefficients: column tau holds bar of |tau>."""

    kind = "bar"

    def validate(self) -> None:
        """Unitriangularity and vanishing at q=1 off the diagonal."""
        from fockdec.partitions import dominated_by

        for lam in self.order:
            for tau in self.order:
                entry = self.entry(lam, tau)
                if lam == tau:
                    if not entry.is_one():
                        raise AssertionError(f"diagonal entry at {lam} is {entry}")
                    continue
                if not entry.is_zero():
                    if not dominated_by(lam, tau):
                        raise AssertionError(
                            f"nonzero entry at non-dominated pair {lam}, {tau}"
                        )
                    if entry.eval_at_one() != 0:
                        raise AssertionError(
                            f"entry at {lam}, {tau} nonzero at q=1: {entry}"
                        )


def single_term_form(poly: LaurentPoly) -> tuple[int, int, int] | None:
    """Match a polynomial against +-q^k * (q^(-2) - 1)^i.

    Returns (sign, k, i) on success and None otherwise.  Off-diagonal bar
    matrix entries are sums of such terms; single-term entries are the common
    case (the q-power exponent comes out of either sign in practice) and the
    genuinely multi-term ones get logged by bar_matrix.
    """
    if poly.is_zero():
        return None
    step = LaurentPoly({-2: 1, 0: -1})
    count = 0
    current = poly
    while not current.is_monomial():
        try:
            current = current.exact_div(step)
        except ValueError:
            return None
        count += 1
    exp, coeff = next(iter(current.items()))
    if abs(coeff) != 1:
        return None
    return coeff, exp, count


def bar_matrix(n: int, m: int) -> BarMatrix:
    """Bar-involution transition matrix on degree m, columns indexed by tau."""
    if n < 2:
        raise ValueError("modulus n must be >= 2")
    if m < 0:
        raise ValueError("degree m must be >= 0")
    order = partitions_of(m)
    index = {lam: i for i, lam in enumerate(order)}
    rows = [[LaurentPoly.zero()] * len(order) for _ in order]
    for col, tau in enumerate(order):
        image = bar_partition(tau, n)
        for lam, coeff in image.terms.items():
            rows[index[lam]][col] = coeff
    matrix = BarMatrix(n=n, m=m, order=order, rows=rows)
    for lam in order:
        for tau in order:
            if lam == tau:
                continue
            entry = matrix.entry(lam, tau)
            if not entry.is_zero() and single_term_form(entry) is None:
                log.info(
                    "bar matrix entry (%s, %s) at n=%d is not a single "
                    "+-q^-j (q^-2 - 1)^i term: %s",
                    format_partition(lam),
                    format_partition(tau),
                    n,
                    entry,
                )
    return matrix
