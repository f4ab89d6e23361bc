"""Exact integer Laurent polynomials in one variable ``t`` and their determinants.

Polynomials are stored densely as a lowest exponent plus a tuple of
coefficients, trimmed so that the first and last coefficients are nonzero.
Python integers are arbitrary precision, so no arithmetic here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "PolyMatrix",
    "ZERO",
    "ONE",
    "T",
    "add",
    "mul",
    "reverse",
    "eval_int",
    "unit_equivalent",
    "det",
    "det_bareiss",
    "det_cofactor",
    "NotDivisible",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class LaurentPoly:
    """Integer Laurent polynomial ``sum(c_k * t**k)``.

    Instances are immutable and hashable.  The zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("_low", "_c")

    def __init__(self, coeffs: Union[Mapping[int, int], None] = None):
        if not coeffs:
            self._low, self._c = 0, ()
            return
        lo, hi = min(coeffs), max(coeffs)
        dense = [0] * (hi - lo + 1)
        for k, v in coeffs.items():
            dense[k - lo] += int(v)
        self._set(lo, dense)

    def _set(self, low: int, dense: Sequence[int]) -> None:
        start, stop = 0, len(dense)
        while start < stop and dense[start] == 0:
            start += 1
        while stop > start and dense[stop - 1] == 0:
            stop -= 1
        if start == stop:
            self._low, self._c = 0, ()
        else:
            self._low, self._c = low + start, tuple(dense[start:stop])

    @classmethod
    def _raw(cls, low: int, dense: Sequence[int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._set(low, dense)
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw(0, (int(c),))

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls._raw(k, (int(c),))

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build ``sum(coeffs[i] * t**(low + i))``."""
        return cls._raw(low, [int(c) for c in coeffs])

    # -- inspection -----------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Exponent -> nonzero coefficient."""
        return {self._low + i: c for i, c in enumerate(self._c) if c}

    @property
    def low(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero polynomial)."""
        return self._low

    @property
    def high(self) -> int:
        return self._low + len(self._c) - 1 if self._c else 0

    @property
    def dense(self) -> tuple[int, ...]:
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._low == other._low and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._low, self._c))

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._low, [-c for c in self._c])

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = _coerce(other)
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self._low, other._low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._c, self._low - lo):
            out[i] += c
        for i, c in enumerate(other._c, other._low - lo):
            out[i] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw(self._low, [c * other for c in self._c])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(self._low + other._low, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if not self._c:
            return self
        return LaurentPoly._raw(self._low + k, self._c)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises :class:`NotDivisible` on a remainder."""
        other = _coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO
        b = other._c
        lead = b[-1]
        rem = list(self._c)
        qlen = len(rem) - len(b) + 1
        if qlen <= 0:
            raise NotDivisible(f"{self} is not divisible by {other}")
        q = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            top = rem[i + len(b) - 1]
            if top:
                if top % lead:
                    raise NotDivisible(f"{self} is not divisible by {other}")
                qc = top // lead
                q[i] = qc
                for j, y in enumerate(b):
                    rem[i + j] -= qc * y
        if any(rem):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return LaurentPoly._raw(self._low - other._low, q)

    def reverse(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        if not self._c:
            return self
        return LaurentPoly._raw(-self.high, self._c[::-1])

    def __call__(self, x: int) -> Union[int, Fraction]:
        return eval_int(self, x)

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            k = self._low + i
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = f"{mag}*t"
            else:
                term = f"{mag}*t^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _coerce(x: Union[LaurentPoly, int]) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def reverse(p: LaurentPoly) -> LaurentPoly:
    return p.reverse()


def eval_int(p: LaurentPoly, x: int) -> Union[int, Fraction]:
    """Evaluate ``p`` exactly at the nonzero integer ``x``.

    Returns an ``int`` whenever the value is integral, otherwise a
    :class:`~fractions.Fraction`.
    """
    if x == 0:
        raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
    acc = 0
    for c in reversed(p.dense):
        acc = acc * x + c
    val = Fraction(acc) * Fraction(x) ** p.low
    return int(val) if val.denominator == 1 else val


def unit_equivalent(a: LaurentPoly, b: LaurentPoly) -> tuple[int, int] | None:
    """Return ``(sign, k)`` with ``a == sign * t**k * b``, or ``None``."""
    if a.is_zero() or b.is_zero():
        return (1, 0) if a.is_zero() and b.is_zero() else None
    k = a.low - b.low
    if a.dense == b.dense:
        return (1, k)
    if a.dense == tuple(-c for c in b.dense):
        return (-1, k)
    return None


# -- matrices -------------------------------------------------------------

Entry = Union[LaurentPoly, int]


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of Laurent polynomials."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_coerce(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def det(self, method: str = "bareiss") -> LaurentPoly:
        return det(self, method)


def _rows(m: Union[PolyMatrix, Sequence[Sequence[Entry]]]) -> list[list[LaurentPoly]]:
    if isinstance(m, PolyMatrix):
        return [list(r) for r in m.entries]
    rows = [[_coerce(x) for x in r] for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    return rows


def det_bareiss(m: Union[PolyMatrix, Sequence[Sequence[Entry]]]) -> LaurentPoly:
    """Fraction-free Gaussian elimination over the Laurent polynomial ring."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                num = ri[j] * pivot - aik * rk[j]
                ri[j] = num.exact_div(prev) if prev != ONE else num
        prev = pivot
    return a[n - 1][n - 1] * sign


def det_cofactor(m: Union[PolyMatrix, Sequence[Sequence[Entry]]]) -> LaurentPoly:
    """Laplace expansion along rows, memoised on the set of remaining columns."""
    a = _rows(m)
    n = len(a)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> LaurentPoly:
        if row == n:
            return ONE
        total = ZERO
        sign = 1
        for j in range(n):
            bit = 1 << j
            if cols & bit:
                x = a[row][j]
                if x:
                    total = total + x * minor(row + 1, cols & ~bit) * sign
                sign = -sign
        return total

    return minor(0, (1 << n) - 1)


def det(m: Union[PolyMatrix, Sequence[Sequence[Entry]]], method: str = "bareiss") -> LaurentPoly:
    """Exact determinant; the empty matrix has determinant 1."""
    if method == "bareiss":
        return det_bareiss(m)
    if method == "cofactor":
        return det_cofactor(m)
    raise ValueError(f"unknown determinant method {method!r}")
