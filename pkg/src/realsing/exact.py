"""Exact integer and rational helpers.

Nothing in this package touches floating point.  Rationals are
:class:`fractions.Fraction`, which already keeps lowest terms with a positive
denominator, so two equal values always compare (and hash) equal.

Besides the number-theoretic helpers this module carries the two dense
linear-algebra routines used as cross-checks elsewhere: fraction-free
(Bareiss) elimination and an exact Gauss-Jordan inverse.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SeifertConstructionError

Rational = Fraction
Matrix = Sequence[Sequence[int]]


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects non-negative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def modular_inverse_solve(b: int, target: int, modulus: int) -> int:
    """Return the unique ``x`` in ``(0, modulus)`` with ``b*x = target (mod modulus)``."""
    if modulus < 2:
        raise SeifertConstructionError(f"modulus must be >= 2, got {modulus}")
    if math.gcd(b, modulus) != 1:
        raise SeifertConstructionError(
            f"{b} is not invertible modulo {modulus}; Seifert pair undefined"
        )
    x = (target * pow(b, -1, modulus)) % modulus
    if x == 0:
        raise SeifertConstructionError(
            f"target {target} is divisible by {modulus}; no solution in (0, {modulus})"
        )
    return x


@dataclass(frozen=True)
class HJExpansion:
    """Hirzebruch-Jung continued fraction ``e1 - 1/(e2 - 1/(... - 1/es))``."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("an HJ expansion needs at least one entry")
        if any(e < 2 for e in self.entries):
            raise ValueError(f"HJ entries must all be >= 2, got {list(self.entries)}")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def value(self) -> Fraction:
        return hj_eval(self.entries)


def hj_expand(num: int, den: int) -> HJExpansion:
    if not (num > den >= 1):
        raise ValueError(f"hj_expand needs num > den >= 1, got {num}/{den}")
    if math.gcd(num, den) != 1:
        raise ValueError(f"hj_expand needs a reduced fraction, got {num}/{den}")
    entries = []
    while den:
        e = -(-num // den)
        entries.append(e)
        num, den = den, e * den - num
    return HJExpansion(tuple(entries))


def hj_eval(entries: HJExpansion | Iterable[int]) -> Fraction:
    """Evaluate a descending continued fraction exactly.

    Arbitrary integer lists are accepted; a vanishing tail raises
    :class:`ZeroDivisionError`.
    """
    seq = list(entries)
    if not seq:
        raise ValueError("cannot evaluate an empty continued fraction")
    value = Fraction(seq[-1])
    for e in reversed(seq[:-1]):
        if value == 0:
            raise ZeroDivisionError(f"continued fraction {seq} has a zero tail")
        value = e - 1 / value
    return value


def hj_numerator(entries: Iterable[int]) -> int:
    """Numerator of ``[e1, ..., es]`` via the continuant recurrence."""
    prev, cur = 1, 0
    for e in reversed(list(entries)):
        prev, cur = e * prev - cur, prev
    return prev


# dense exact linear algebra -------------------------------------------------


def bareiss_minors(m: Matrix) -> list[int]:
    """Leading principal minors of ``m`` by fraction-free elimination.

    No pivoting is done, so the k-th Bareiss pivot is the k-th leading minor.
    Elimination stops at the first vanishing minor; the returned list is
    then shorter than ``len(m)`` with a trailing zero.
    """
    n = len(m)
    a = [list(row) for row in m]
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def bareiss_det(m: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination with row swaps."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def exact_inverse(m: Matrix) -> list[list[Fraction]]:
    """Inverse over the rationals by fraction-free Gauss-Jordan.

    Every intermediate entry is an integer minor, so the work stays in
    machine-friendly integers; the right half ends as ``det * m^-1``.
    """
    n = len(m)
    a = [[int(x) for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        pivot_row = a[k]
        akk = pivot_row[k]
        support = [j for j, x in enumerate(pivot_row) if x]
        for r in range(n):
            if r == k:
                continue
            row = a[r]
            f = row[k]
            new = [akk * x // prev for x in row]
            if f:
                for j in support:
                    new[j] = (akk * row[j] - f * pivot_row[j]) // prev
            a[r] = new
        prev = akk
    return [[Fraction(x, prev) for x in a[i][n:]] for i in range(n)]


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1
