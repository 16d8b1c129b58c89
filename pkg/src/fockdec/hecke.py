"""Iwahori-Hecke algebra of type A over exact Laurent arithmetic.

First-principles oracle for the Gram-determinant valuations: the algebra is
built on the quadratic relation T_i^2 = (q-1) T_i + q (so T_w T_i = T_{w s_i}
when the length goes up, and (q-1) T_w + q T_{w s_i} otherwise), cell modules
come from the cellular basis m_{st} = T_{d(s)*} x_shape T_{d(t)} with x the
sum of T_w over a row stabilizer, and Gram matrices are extracted by exact
elimination against that basis.

Under this quadratic convention the unsigned row-sum cell module of a shape
is the module labelled by the conjugate shape in the hook-length sum formula
(the one-row cell module is the index representation), so Gram matrices are
computed from the conjugate shape; determinant valuations and residue ranks
are insensitive to the remaining unit and q-power normalization choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations

from fockdec.errors import ConventionError, ZeroGramDeterminant
from fockdec.laurent import LaurentPoly, cyclotomic, cyclotomic_valuation
from fockdec.partitions import (
    Partition,
    Tableau,
    check_partition,
    conjugate,
    conjugate_tableau,
    dominated_by,
    partitions_of,
    standard_tableaux,
)

DEFAULT_SIZE_CAP = 5

Perm = tuple  # one-line notation, 0-based: w[i] is the image of i


def identity_perm(m: int) -> Perm:
    return tuple(range(m))


@lru_cache(maxsize=None)
def perm_length(w: Perm) -> int:
    """Coxeter length: the number of inversions."""
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v] = i
    return tuple(inv)


def perm_compose(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i]] for i in range(len(u)))


def right_gen(w: Perm, i: int) -> Perm:
    """w s_i: swap the entries at positions i, i+1."""
    out = list(w)
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for w, as generator indices applied left to right."""
    word = []
    current = list(w)
    while True:
        descent = -1
        for i in range(len(current) - 1):
            if current[i] > current[i + 1]:
                descent = i
                break
        if descent < 0:
            break
        current[descent], current[descent + 1] = current[descent + 1], current[descent]
        word.append(descent)
    return tuple(reversed(word))


class HeckeElement:
    """Finite combination of natural basis elements T_w of one fixed rank."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        table: dict[Perm, LaurentPoly] = {}
        if terms:
            for w, coeff in terms.items():
                if not isinstance(coeff, LaurentPoly):
                    coeff = LaurentPoly({0: coeff}) if coeff else LaurentPoly.zero()
                if not coeff.is_zero():
                    table[tuple(w)] = coeff
        self.terms = table

    @classmethod
    def t(cls, m: int, w: Perm, coeff: LaurentPoly | int = 1) -> "HeckeElement":
        return cls(m, {tuple(w): coeff})

    @classmethod
    def unit(cls, m: int) -> "HeckeElement":
        return cls.t(m, identity_perm(m))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Perm) -> LaurentPoly:
        return self.terms.get(tuple(w), LaurentPoly.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_rank(other)
        table = dict(self.terms)
        for w, coeff in other.terms.items():
            table[w] = table.get(w, LaurentPoly.zero()) + coeff
        return HeckeElement(self.m, table)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, factor: LaurentPoly) -> "HeckeElement":
        return HeckeElement(
            self.m, {w: coeff * factor for w, coeff in self.terms.items()}
        )

    def right_generator(self, i: int) -> "HeckeElement":
        """Multiply by T_{s_i} on the right."""
        table: dict[Perm, LaurentPoly] = {}

        def add(w, coeff):
            acc = table.get(w)
            table[w] = coeff if acc is None else acc + coeff

        q = LaurentPoly.q_power(1)
        q_minus_1 = LaurentPoly({1: 1, 0: -1})
        for w, coeff in self.terms.items():
            ws = right_gen(w, i)
            if w[i] < w[i + 1]:
                add(ws, coeff)
            else:
                add(w, coeff * q_minus_1)
                add(ws, coeff * q)
        return HeckeElement(self.m, table)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_rank(other)
        result = HeckeElement(self.m)
        for v, coeff in other.terms.items():
            partial = self
            for i in reduced_word(v):
                partial = partial.right_generator(i)
            result = result + partial.scale(coeff)
        return result

    def star(self) -> "HeckeElement":
        """The anti-automorphism sending T_w to T at the inverse of w."""
        return HeckeElement(
            self.m, {perm_inverse(w): coeff for w, coeff in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = " + ".join(
            f"({coeff})T{list(w)}"
            for w, coeff in sorted(self.terms.items(), key=lambda kv: (perm_length(kv[0]), kv[0]))
        )
        return f"HeckeElement({bits})"

    def _check_rank(self, other: "HeckeElement") -> None:
        if self.m != other.m:
            raise ValueError(f"rank mismatch: {self.m} vs {other.m}")


def hecke_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    return x * y


# -- cellular basis ----------------------------------------------------------


def row_reading_tableau(lam: Partition) -> Tableau:
    """The superstandard tableau: 1..m filled along rows."""
    lam = check_partition(lam)
    out = []
    next_value = 1
    for part in lam:
        out.append(tuple(range(next_value, next_value + part)))
        next_value += part
    return tuple(out)


def tableau_perm(t: Tableau) -> Perm:
    """Distinguished coset representative attached to a row-standard tableau.

    Sends each entry of t to the entry of the row-reading tableau in the same
    cell; rows of t being increasing, this maps every row order-preservingly
    onto its block, which makes it the minimal-length element of its row
    stabilizer coset and keeps row-sum products multiplicity free.
    """
    shape = tuple(len(row) for row in t)
    base = row_reading_tableau(shape)
    m = sum(shape)
    word = [0] * m
    for r, row in enumerate(t):
        for c, entry in enumerate(row):
            word[entry - 1] = base[r][c] - 1
    return tuple(word)


def _row_stabilizer(lam: Partition) -> list[Perm]:
    """All permutations preserving each row of the row-reading tableau setwise."""
    m = sum(lam)
    base = row_reading_tableau(lam)
    perms = [identity_perm(m)]
    for row in base:
        values = [v - 1 for v in row]
        extended = []
        for w in perms:
            for assignment in iter_permutations(values):
                new = list(w)
                for v, img in zip(values, assignment):
                    new[v] = img
                extended.append(tuple(new))
        perms = extended
    return perms


@lru_cache(maxsize=None)
def _row_sum(lam: Partition) -> HeckeElement:
    m = sum(lam)
    return HeckeElement(m, {w: 1 for w in _row_stabilizer(lam)})


def murphy_element(s: Tableau, t: Tableau) -> HeckeElement:
    """The cellular basis element attached to a pair of standard tableaux."""
    shape_s = tuple(len(row) for row in s)
    shape_t = tuple(len(row) for row in t)
    if shape_s != shape_t:
        raise ValueError(f"shape mismatch: {shape_s} vs {shape_t}")
    m = sum(shape_s)
    x = _row_sum(shape_s)
    left = HeckeElement.t(m, perm_inverse(tableau_perm(s)))
    right = HeckeElement.t(m, tableau_perm(t))
    return left * x * right


def _term_order(w: Perm):
    return (perm_length(w), w)


class MurphyTable:
    """Change of basis between the natural and cellular bases of one rank.

    Cellular elements are processed shape-graded (dominance-descending) and
    echelonized against the natural basis ordered by (length, one-line word):
    each reduced row keeps a distinct pivot permutation carrying a
    unit-monomial coefficient, and remembers its own expansion in the
    original cellular elements.  Every pivot being a unit makes all later
    divisions exact; a non-unit pivot raises ConventionError since it would
    mean the documented order is not triangular after all.
    """

    def __init__(self, m: int):
        self.m = m
        # pivot perm -> (pivot coeff, reduced element, cellular expansion)
        self.records: dict[Perm, tuple[LaurentPoly, HeckeElement, dict]] = {}
        for lam in partitions_of(m):
            tableaux = standard_tableaux(lam)
            for si in range(len(tableaux)):
                for ti in range(len(tableaux)):
                    key = (lam, si, ti)
                    element = murphy_element(tableaux[si], tableaux[ti])
                    residual, combo = self._reduce(element)
                    for k, c in combo.items():
                        combo[k] = -c
                    combo[key] = combo.get(key, LaurentPoly.zero()) + LaurentPoly.one()
                    combo = {k: c for k, c in combo.items() if not c.is_zero()}
                    if residual.is_zero():
                        raise ConventionError(
                            f"cellular element {key} is not independent"
                        )
                    pivot = max(residual.terms, key=_term_order)
                    coeff = residual.terms[pivot]
                    if not coeff.is_unit_monomial():
                        raise ConventionError(
                            f"reduced cellular element {key} has non-unit "
                            f"pivot coefficient {coeff} at {pivot}"
                        )
                    self.records[pivot] = (coeff, residual, combo)

    def _reduce(self, element: HeckeElement) -> tuple[HeckeElement, dict]:
        """Eliminate leading terms against existing records.

        Returns the reduced element together with the record combination that
        was subtracted, expanded in the original cellular elements.
        """
        used: dict[tuple, LaurentPoly] = {}
        residual = element
        while not residual.is_zero():
            lead = max(residual.terms, key=_term_order)
            record = self.records.get(lead)
            if record is None:
                break
            pivot_coeff, pivot_element, combo = record
            exp, unit = next(iter(pivot_coeff.items()))
            factor = residual.terms[lead] * LaurentPoly({-exp: unit})
            residual = residual - pivot_element.scale(factor)
            for k, c in combo.items():
                used[k] = used.get(k, LaurentPoly.zero()) + factor * c
        return residual, used

    def express(self, element: HeckeElement) -> dict[tuple, LaurentPoly]:
        """Coordinates of an element in the cellular basis."""
        residual, coords = self._reduce(element)
        if not residual.is_zero():
            lead = max(residual.terms, key=_term_order)
            raise ConventionError(f"no cellular pivot at {lead}")
        return {key: coeff for key, coeff in coords.items() if not coeff.is_zero()}


@lru_cache(maxsize=None)
def murphy_table(m: int) -> MurphyTable:
    return MurphyTable(m)


# -- Gram matrices -----------------------------------------------------------


@dataclass
class GramMatrix:
    """Cell-module bilinear form of a shape, indexed by its standard tableaux."""

    shape: Partition
    tableaux: tuple[Tableau, ...]
    rows: list[list[LaurentPoly]]

    def determinant(self) -> LaurentPoly:
        return bareiss_determinant(self.rows)


def gram_matrix(lam: Partition, size_cap: int = DEFAULT_SIZE_CAP) -> GramMatrix:
    """Exact Gram matrix of the cell-module form attached to lam.

    Computed on the conjugate shape (see the module docstring), so the
    determinant valuations line up with the hook-length sum formula for lam
    itself.  Capped by default at |lam| <= 5: the rank-6 algebra already has
    dimension 720 and is noticeably slower.
    """
    lam = check_partition(lam)
    m = sum(lam)
    if m > size_cap:
        raise ValueError(
            f"|{lam}| = {m} exceeds the size cap {size_cap}; raise size_cap "
            "explicitly if you accept the cost"
        )
    mu = conjugate(lam)
    table = murphy_table(m)
    mu_tableaux = standard_tableaux(mu)
    mu_index = {t: i for i, t in enumerate(mu_tableaux)}
    top = row_reading_tableau(mu)
    top_key = (mu, mu_index[top], mu_index[top])
    lam_tableaux = standard_tableaux(lam)
    paired = [conjugate_tableau(t) for t in lam_tableaux]

    def pairing(s: Tableau, t: Tableau) -> LaurentPoly:
        product = murphy_element(top, s) * murphy_element(t, top)
        value = LaurentPoly.zero()
        for key, coeff in table.express(product).items():
            shape = key[0]
            if key == top_key:
                value = value + coeff
            elif shape == mu:
                raise ConventionError(
                    f"product for {lam} has a stray same-shape component {key}"
                )
            elif not dominated_by(mu, shape):
                raise ConventionError(
                    f"product for {lam} leaks into non-dominating shape {shape}"
                )
        return value

    size = len(paired)
    rows = [[LaurentPoly.zero()] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = pairing(paired[i], paired[j])
            rows[i][j] = value
            if i != j:
                check = pairing(paired[j], paired[i])
                if check != value:
                    raise ConventionError(
                        f"Gram matrix for {lam} is not symmetric at ({i},{j})"
                    )
                rows[j][i] = value
    return GramMatrix(shape=lam, tableaux=lam_tableaux, rows=rows)


def bareiss_determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant; every division is exact in the Laurent ring."""
    size = len(matrix)
    if size == 0:
        return LaurentPoly.one()
    a = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(size - 1):
        if a[k][k].is_zero():
            pivot_row = next(
                (r for r in range(k + 1, size) if not a[r][k].is_zero()), None
            )
            if pivot_row is None:
                return LaurentPoly.zero()
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = numerator.exact_div(prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign > 0 else -det


def gram_determinant(lam: Partition, size_cap: int = DEFAULT_SIZE_CAP) -> LaurentPoly:
    return gram_matrix(lam, size_cap).determinant()


def gram_det_valuation(lam: Partition, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Multiplicity of Phi_n in the exact Gram determinant."""
    det = gram_determinant(lam, size_cap)
    if det.is_zero():
        raise ZeroGramDeterminant(f"Gram determinant of {lam} vanished identically")
    return cyclotomic_valuation(det, n)


# -- rank over the residue field ----------------------------------------------


class ResidueField:
    """Q[q] modulo the n-th cyclotomic polynomial, with exact rationals.

    Elements are coefficient tuples of length deg(Phi_n); q is invertible
    since q^n reduces to 1.
    """

    def __init__(self, n: int):
        self.n = n
        phi, _shift = cyclotomic(n)._as_poly()
        self.modulus = [Fraction(c) for c in phi]
        self.degree = len(phi) - 1
        powers = []
        current = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        for _ in range(n):
            powers.append(tuple(current))
            current = self._shift_reduce(current)
        self._q_powers = powers

    def _shift_reduce(self, coeffs: list[Fraction]) -> list[Fraction]:
        shifted = [Fraction(0)] + list(coeffs)
        lead = shifted.pop()
        if lead:
            for i in range(self.degree):
                shifted[i] -= lead * self.modulus[i]
        return shifted

    def zero(self) -> tuple:
        return tuple([Fraction(0)] * self.degree)

    def reduce(self, poly: LaurentPoly) -> tuple:
        out = [Fraction(0)] * self.degree
        for e, c in poly.items():
            power = self._q_powers[e % self.n]
            for i in range(self.degree):
                out[i] += c * power[i]
        return tuple(out)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        acc = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        acc[i + j] += x * y
        while len(acc) > self.degree:
            lead = acc.pop()
            if lead:
                offset = len(acc) - self.degree
                for i in range(self.degree):
                    acc[offset + i] -= lead * self.modulus[i]
        return tuple(acc)

    def scale(self, a: tuple, factor: Fraction) -> tuple:
        return tuple(x * factor for x in a)

    def inverse(self, a: tuple) -> tuple:
        """Extended Euclid against the modulus."""
        if not any(a):
            raise ZeroDivisionError("inverse of zero in the residue field")
        r0 = list(self.modulus)
        r1 = list(a) + [Fraction(0)]
        s0 = [Fraction(0)] * (self.degree + 1)
        s1 = [Fraction(1)] + [Fraction(0)] * self.degree
        while any(r1):
            d0 = _poly_degree(r0)
            d1 = _poly_degree(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            factor = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= factor * r1[i]
            for i in range(len(s1) - shift):
                s0[i + shift] -= factor * s1[i]
        d0 = _poly_degree(r0)
        if d0 != 0:
            raise ZeroDivisionError("element is not invertible (degenerate modulus)")
        lead = r0[0]
        return tuple(c / lead for c in s0[: self.degree])


def _poly_degree(coeffs: list[Fraction]) -> int:
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i
    return -1


def gram_rank_at_root(lam: Partition, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Rank of the Gram matrix with q specialized to a primitive n-th root."""
    gram = gram_matrix(lam, size_cap)
    field = ResidueField(n)
    rows = [[field.reduce(entry) for entry in row] for row in gram.rows]
    size = len(rows)
    rank = 0
    pivot_col = 0
    for col in range(size):
        pivot = next(
            (r for r in range(rank, size) if any(rows[r][col])), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inverse(rows[rank][col])
        rows[rank] = [field.mul(inv, entry) for entry in rows[rank]]
        for r in range(size):
            if r != rank and any(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [
                    field.add(rows[r][j], field.scale(field.mul(factor, rows[rank][j]), Fraction(-1)))
                    for j in range(size)
                ]
        rank += 1
    return rank
