"""Seifert invariants of the link of ``conj(xy)(x^p + y^q) + z^r``.

Everything is driven by the triple ``(delta, a, b)`` where
``delta = gcd(r, pq - p - q)``, ``a = r / delta`` and ``b = (pq - p - q) / delta``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameters
from .exact import gcd, modular_inverse_solve


@dataclass(frozen=True)
class FamilyParams:
    p: int
    q: int
    r: int
    delta: int
    a: int
    b: int

    @property
    def m(self) -> int:
        """``pq - p - q``, always odd for coprime ``p, q``."""
        return self.p * self.q - self.p - self.q

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


@dataclass(frozen=True)
class SeifertData:
    """Unnormalized Seifert tuple ``(genus; e0; (alpha_i, beta_i)...)``."""

    genus: int
    e0: Fraction
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for alpha, beta in self.pairs:
            if not (0 < beta < alpha) or math.gcd(alpha, beta) != 1:
                raise ValueError(f"invalid Seifert pair ({alpha}, {beta})")

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(alpha for alpha, _ in self.pairs)


def validate_exponents(p: int, q: int, r: int) -> None:
    for name, value in (("p", p), ("q", q), ("r", r)):
        if value < 2:
            raise InvalidParameters(f"{name} must be >= 2 (got {name}={value})")
    if math.gcd(p, q) != 1:
        raise InvalidParameters(f"p and q must be coprime (gcd({p}, {q}) = {math.gcd(p, q)})")


def family_params(p: int, q: int, r: int) -> FamilyParams:
    validate_exponents(p, q, r)
    m = p * q - p - q
    delta = gcd(r, m)
    return FamilyParams(p=p, q=q, r=r, delta=delta, a=r // delta, b=m // delta)


def seifert_data(fp: FamilyParams) -> SeifertData:
    """Seifert invariants of the real link.

    For ``a > 1`` the pairs are ``(aq, b1), (ap, b2), (a, b3)`` with
    ``b*b1 = -1 (mod aq)``, ``b*b2 = -1 (mod ap)``, ``b*b3 = 1 (mod a)``.
    For ``a = 1`` the third orbit is not exceptional and only two pairs remain.
    """
    a, b, p, q = fp.a, fp.b, fp.p, fp.q
    pairs = [
        (a * q, modular_inverse_solve(b, -1, a * q)),
        (a * p, modular_inverse_solve(b, -1, a * p)),
    ]
    if a > 1:
        pairs.append((a, modular_inverse_solve(b, 1, a)))
    return SeifertData(
        genus=(fp.delta - 1) // 2,
        e0=Fraction(-fp.delta, a * p * q),
        pairs=tuple(pairs),
    )


def seifert_data_complex(p: int, q: int) -> SeifertData:
    """Seifert invariants of the link of ``xy(x^p + y^q) + z^2``."""
    validate_exponents(p, q, 2)
    b_prime = p * q + p + q
    return SeifertData(
        genus=0,
        e0=Fraction(-1, 2 * p * q),
        pairs=(
            (2 * q, modular_inverse_solve(b_prime, 1, 2 * q)),
            (2 * p, modular_inverse_solve(b_prime, 1, 2 * p)),
            (2, modular_inverse_solve(b_prime, 1, 2)),
        ),
    )
