"""Milnor fibre Euler characteristics and the mod-12 smoothing obstruction."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .seifert import FamilyParams, validate_exponents

# residue pairs (p mod 12, q mod 12) where the a=2, b=1 defect always vanishes
PROPOSITION_ZERO_SET = frozenset(
    {(1, 4), (1, 10), (2, 5), (4, 1), (5, 2), (5, 8), (8, 5), (10, 1)}
)

ALWAYS_ZERO = "always-zero"
NEVER_ZERO = "never-zero"
MIXED = "mixed"
NO_WITNESS = "no-witness"


def chi_fibre_curve(p: int, q: int) -> int:
    """Euler characteristic of the Milnor fibre of ``conj(xy)(x^p + y^q)``.

    The fibre is a wedge of circles, ``chi = p + q - pq``.
    """
    validate_exponents(p, q, 2)
    return p + q - p * q


def chi_fibre(p: int, q: int, r: int) -> int:
    """Euler characteristic of the Milnor fibre of ``F`` (join with ``z^r``)."""
    validate_exponents(p, q, r)
    return 1 + (r - 1) * (1 - chi_fibre_curve(p, q))


@dataclass(frozen=True)
class CongruenceReport:
    p: int
    q: int
    r: int
    chi_resolution: int
    k_squared: Fraction
    chi_fibre: int
    value: int | None
    obstructed: bool
    applicable: bool


def congruence(fp: FamilyParams, chi_res: int, k_sq: Fraction | int, chi_f: int) -> CongruenceReport:
    """Defect ``chi(resolution) + K^2 - chi(fibre)`` reduced mod 12.

    Only meaningful when ``a = 2`` (integral canonical class).  A nonzero value
    obstructs the fibration from being that of a smoothing; zero decides
    nothing.
    """
    k_sq = Fraction(k_sq)
    applicable = fp.a == 2 and k_sq.denominator == 1
    value = int(chi_res + k_sq - chi_f) % 12 if applicable else None
    return CongruenceReport(
        p=fp.p,
        q=fp.q,
        r=fp.r,
        chi_resolution=chi_res,
        k_squared=k_sq,
        chi_fibre=chi_f,
        value=value,
        obstructed=bool(applicable and value != 0),
        applicable=applicable,
    )


def closed_form_value(p: int, q: int) -> int:
    """``11 - 2p - 2q - delta(2 delta + 1) mod 12`` with ``delta = pq - p - q``."""
    delta = p * q - p - q
    return (11 - 2 * p - 2 * q - delta * (2 * delta + 1)) % 12


@dataclass(frozen=True)
class ResidueCensus:
    max_p: int
    max_q: int
    cells: dict[tuple[int, int], str]
    witnesses: dict[tuple[int, int], tuple[int, int]]
    values: dict[tuple[int, int], frozenset[int]]

    @property
    def zero_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(k for k, v in self.cells.items() if v == ALWAYS_ZERO)

    @property
    def has_mixed(self) -> bool:
        return any(v == MIXED for v in self.cells.values())

    def matches_proposition(self) -> bool:
        return self.zero_set == PROPOSITION_ZERO_SET and not self.has_mixed


def residue_table(max_p: int, max_q: int) -> ResidueCensus:
    if max_p < 14 or max_q < 14:
        raise ValueError("scan bounds must be >= 14 to witness every residue pair")
    seen: dict[tuple[int, int], set[int]] = defaultdict(set)
    witnesses: dict[tuple[int, int], tuple[int, int]] = {}
    for p in range(2, max_p + 1):
        for q in range(2, max_q + 1):
            if math.gcd(p, q) != 1:
                continue
            key = (p % 12, q % 12)
            seen[key].add(closed_form_value(p, q))
            witnesses.setdefault(key, (p, q))
    cells = {}
    for i in range(12):
        for j in range(12):
            vals = seen.get((i, j))
            if not vals:
                cells[(i, j)] = NO_WITNESS
            elif vals == {0}:
                cells[(i, j)] = ALWAYS_ZERO
            elif 0 in vals:
                cells[(i, j)] = MIXED
            else:
                cells[(i, j)] = NEVER_ZERO
    return ResidueCensus(
        max_p=max_p,
        max_q=max_q,
        cells=cells,
        witnesses=witnesses,
        values={k: frozenset(v) for k, v in seen.items()},
    )
