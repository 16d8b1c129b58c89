"""Exact arithmetic in the ring of integer Laurent polynomials in q.

Coefficients are arbitrary-precision Python integers; exponents may be
negative.  The module also provides quantum integers [h], cyclotomic
polynomials, and the multiplicity-of-Phi_n valuation used throughout.
"""

from __future__ import annotations

import re
from functools import lru_cache


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as a mapping exponent -> nonzero coefficient; the empty mapping is
    the zero polynomial.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    table[int(e)] = c
        self._c = table
        self._hash = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q_power(cls, exp: int) -> "LaurentPoly":
        return cls({exp: 1})

    @classmethod
    def from_int(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    # -- basic structure ----------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def is_polynomial(self) -> bool:
        """True iff no negative exponents occur (element of Z[q])."""
        return all(e >= 0 for e in self._c)

    def is_q_multiple(self) -> bool:
        """True iff the polynomial lies in q.Z[q] (all exponents >= 1)."""
        return all(e >= 1 for e in self._c)

    def nonpositive_part(self) -> "LaurentPoly":
        """Terms with exponent <= 0; zero iff the value lies in q.Z[q]."""
        return LaurentPoly({e: c for e, c in self._c.items() if e <= 0})

    def is_unit_monomial(self) -> bool:
        """True iff of the form +-q^k."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        table = dict(self._c)
        for e, c in other._c.items():
            new = table.get(e, 0) + c
            if new:
                table[e] = new
            else:
                table.pop(e, None)
        return _wrap(table)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        table = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                new = table.get(e, 0) + c1 * c2
                if new:
                    table[e] = new
                else:
                    table.pop(e, None)
        return _wrap(table)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only defined for unit monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- the operations the verification suite is built from ----------------

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^{-1}: negate every exponent."""
        return _wrap({-e: c for e, c in self._c.items()})

    def eval_at_one(self) -> int:
        """Value at q = 1: the sum of the coefficients."""
        return sum(self._c.values())

    def derivative_at_one(self) -> int:
        """Value of the formal derivative at q = 1: sum of coeff * exponent."""
        return sum(c * e for e, c in self._c.items())

    def is_bar_symmetric(self) -> bool:
        return self.bar() == self

    def is_bar_antisymmetric(self) -> bool:
        return self.bar() == -self

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring; raises if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        num, num_shift = self._as_poly()
        den, den_shift = other._as_poly()
        quo, rem = _poly_divmod(num, den)
        if any(rem):
            raise ValueError(f"{self} is not divisible by {other}")
        shift = num_shift - den_shift
        return _wrap({i + shift: c for i, c in enumerate(quo) if c})

    def _as_poly(self) -> tuple[list[int], int]:
        """Dense coefficient list after clearing the q-power unit, plus the shift."""
        shift = self.min_exp()
        degree = self.max_exp() - shift
        dense = [0] * (degree + 1)
        for e, c in self._c.items():
            dense[e - shift] = c
        return dense, shift

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for e in sorted(self._c):
            c = self._c[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    @classmethod
    def from_string(cls, text: str) -> "LaurentPoly":
        return parse_poly(text)


def _wrap(table: dict) -> LaurentPoly:
    poly = LaurentPoly.__new__(LaurentPoly)
    poly._c = {e: c for e, c in table.items() if c}
    poly._hash = None
    return poly


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly({0: value})
    raise TypeError(f"cannot coerce {value!r} to LaurentPoly")


_TERM_RE = re.compile(
    r"^\s*(?P<coeff>[+-]?\d+)?\s*\*?\s*(?P<q>q(\^(?P<exp>-?\d+))?)?\s*$"
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical rendering, e.g. 'q^-1 - q + 2*q^3'."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    if text == "0":
        return LaurentPoly.zero()
    table: dict[int, int] = {}
    for sign, body in _iter_terms(text):
        match = _TERM_RE.match(body)
        if not match or (match.group("coeff") is None and match.group("q") is None):
            raise ValueError(f"cannot parse polynomial term {body!r} in {text!r}")
        coeff = int(match.group("coeff")) if match.group("coeff") else 1
        if match.group("q"):
            exp = int(match.group("exp")) if match.group("exp") else 1
        else:
            exp = 0
        table[exp] = table.get(exp, 0) + sign * coeff
    return LaurentPoly(table)


def _iter_terms(text: str):
    """Yield (sign, term_body) pairs; '^-' exponents are not term separators."""
    i = 0
    sign = 1
    if text.startswith("-"):
        sign = -1
        i = 1
    elif text.startswith("+"):
        i = 1
    start = i
    while i < len(text):
        ch = text[i]
        if ch in "+-" and text[i - 1] != "^":
            yield sign, text[start:i].strip()
            sign = 1 if ch == "+" else -1
            i += 1
            start = i
        else:
            i += 1
    yield sign, text[start:].strip()


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of dense integer coefficient lists (ascending order).

    Coefficient divisions must be exact at every step; raises otherwise.
    """
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    lead = den[dn]
    quo = [0] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        factor, rem = divmod(c, lead)
        if rem:
            raise ValueError("non-exact coefficient division")
        quo[i - dn] = factor
        for j in range(dn + 1):
            num[i - dn + j] -= factor * den[j]
    return quo, num


def quantum_integer(h: int) -> LaurentPoly:
    """[h] = 1 + q + ... + q^{h-1}."""
    if h <= 0:
        raise ValueError("quantum integer defined for h >= 1")
    return LaurentPoly({e: 1 for e in range(h)})


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, via exact division of q^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    return poly


def cyclotomic_valuation(f: LaurentPoly, n: int) -> int:
    """Largest k with Phi_n^k dividing f, after clearing the q-power unit.

    Undefined (raises) for f = 0.
    """
    if n < 2:
        raise ValueError("valuation defined for n >= 2")
    if f.is_zero():
        raise ValueError("the zero polynomial has infinite valuation")
    phi = cyclotomic(n)
    count = 0
    current = f
    while True:
        try:
            current = current.exact_div(phi)
        except ValueError:
            return count
        count += 1


def nu_quantum(h: int, n: int) -> int:
    """Multiplicity of Phi_n in the quantum integer [h]: 1 if n | h else 0."""
    if h <= 0:
        raise ValueError("quantum integer defined for h >= 1")
    if n < 2:
        raise ValueError("valuation defined for n >= 2")
    return 1 if h % n == 0 else 0
