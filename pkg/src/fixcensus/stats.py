"""Empirical average and density tables for the integer-coefficient maps.

For integer c, the fixed-point count of z -> z^d + c on F_p is controlled by
divisibility: which small primes divide c, c - 1 or c + 1.  The tables here
make that quantitative at desk scale, summing exact oracle counts over
qualifying primes (averages) or counting qualifying primes directly
(densities).  Everything is exact rational arithmetic via Fraction; floats
appear only when a renderer formats a ratio.

Prime floors: the prime-power family starts at p = 3 and the pminus1 family
at p = 5, matching the smallest primes the counting claims cover.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from . import dynamics
from .dynamics import DEFAULT_EXP_CAP, Family, MapSpec
from .ff import DEFAULT_FIELD_CAP, CapError, standard_field

__all__ = [
    "DEFAULT_SIEVE_CAP",
    "SieveCapError",
    "Selector",
    "DensityKind",
    "AverageRow",
    "DensityRow",
    "prime_sieve",
    "average_report",
    "density_table",
]

DEFAULT_SIEVE_CAP = 10**8


class SieveCapError(CapError):
    """The sieve limit exceeds the configured cap."""


class Selector(enum.Enum):
    """Which primes qualify for an average at bound c."""

    DIVIDES_C = "p|c"
    DIVIDES_C_MINUS_1 = "p|c-1"
    DIVIDES_C_PLUS_1 = "p|c+1"
    NOT_DIVIDES_C = "p!|c"

    def __str__(self) -> str:
        return self.value


class DensityKind(enum.Enum):
    """Predicted-count classes whose prime densities are tabulated."""

    NC3 = "nc3"  # prime-power family, count 3: primes dividing c
    NC0 = "nc0"  # prime-power family, count 0: primes not dividing c
    MC2 = "mc2"  # pminus1 family, count 2: primes dividing c
    MC1 = "mc1"  # pminus1 family, count 1: primes dividing c - 1
    MC0 = "mc0"  # pminus1 family, count 0: primes dividing c + 1

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AverageRow:
    """Average oracle count over the qualifying primes at one bound c."""

    c: int
    selector: Selector
    prime_floor: int
    numerator: int
    denominator: int
    ratio: Fraction | None

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "selector": self.selector.value,
            "prime_floor": self.prime_floor,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "ratio": str(self.ratio) if self.ratio is not None else None,
        }


@dataclass(frozen=True)
class DensityRow:
    """Share of primes in [floor, c] meeting one divisibility condition."""

    c: int
    kind: DensityKind
    numerator: int
    denominator: int
    ratio: Fraction | None

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "kind": self.kind.value,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "ratio": str(self.ratio) if self.ratio is not None else None,
        }


def prime_sieve(limit: int, *, sieve_cap: int = DEFAULT_SIEVE_CAP) -> list[int]:
    """All primes <= limit, ascending; plain Eratosthenes on a bytearray."""
    if limit > sieve_cap:
        raise SieveCapError(f"sieve limit {limit} exceeds the cap {sieve_cap}")
    if limit < 2:
        return []
    mark = bytearray([1]) * (limit + 1)
    mark[0] = mark[1] = 0
    i = 2
    while i * i <= limit:
        if mark[i]:
            mark[i * i :: i] = bytearray((limit - i * i) // i + 1)
        i += 1
    return [i for i in range(2, limit + 1) if mark[i]]


def _family_floor(family: Family) -> int:
    if family is Family.PRIME_POWER:
        return 3
    if family is Family.P_MINUS_ONE:
        return 5
    raise ValueError("averages and densities are defined for the two named families")


def _qualifying_primes(
    selector: Selector, c: int, floor: int, sieve_cap: int
) -> list[int]:
    # The prime range tracks the divisibility target: p | c+1 admits primes
    # up to c+1, p | c-1 up to c-1, and the rest up to c.
    if selector is Selector.DIVIDES_C_PLUS_1:
        bound, target = c + 1, c + 1
    elif selector is Selector.DIVIDES_C_MINUS_1:
        bound, target = c - 1, c - 1
    else:
        bound, target = c, c
    primes = [p for p in prime_sieve(max(bound, 0), sieve_cap=sieve_cap) if p >= floor]
    if selector is Selector.NOT_DIVIDES_C:
        return [p for p in primes if target % p != 0]
    return [p for p in primes if target % p == 0]


def _family_map(family: Family, p: int, ell: int, c: int) -> MapSpec:
    if family is Family.PRIME_POWER:
        return MapSpec.prime_power(p, ell, c)
    return MapSpec.p_minus_one(p, ell, c)


def average_report(
    family: Family,
    n: int,
    ell: int,
    selector: Selector,
    c_list: Iterable[int],
    *,
    field_cap: int = DEFAULT_FIELD_CAP,
    exp_cap: int = DEFAULT_EXP_CAP,
    sieve_cap: int = DEFAULT_SIEVE_CAP,
) -> list[AverageRow]:
    """Average oracle fixed-point count over qualifying primes, per bound.

    For each c, every qualifying prime p contributes
    fixed_point_count(F_{p^n}, z^d + c) with the integer c embedded mod p.
    The sum and the prime count are kept separate so the ratio stays an
    exact rational; an empty qualifying set yields denominator 0 and no
    ratio rather than an error.
    """
    floor = _family_floor(family)
    rows = []
    for c in c_list:
        qual = _qualifying_primes(selector, c, floor, sieve_cap)
        numerator = 0
        for p in qual:
            fs = standard_field(p, n)
            m = _family_map(family, p, ell, c)
            numerator += dynamics.fixed_point_count(
                fs, m, field_cap=field_cap, exp_cap=exp_cap
            )
        ratio = Fraction(numerator, len(qual)) if qual else None
        rows.append(AverageRow(c, selector, floor, numerator, len(qual), ratio))
    return rows


_KIND_RULES: dict[DensityKind, tuple[int, Selector]] = {
    DensityKind.NC3: (3, Selector.DIVIDES_C),
    DensityKind.NC0: (3, Selector.NOT_DIVIDES_C),
    DensityKind.MC2: (5, Selector.DIVIDES_C),
    DensityKind.MC1: (5, Selector.DIVIDES_C_MINUS_1),
    DensityKind.MC0: (5, Selector.DIVIDES_C_PLUS_1),
}


def density_table(
    kind: DensityKind,
    n: int = 1,
    ell: int = 1,
    c_list: Iterable[int] = (),
    *,
    sieve_cap: int = DEFAULT_SIEVE_CAP,
) -> list[DensityRow]:
    """Prime-counting densities per bound c.

    numerator counts primes p in [floor, c] satisfying the kind's
    divisibility condition; denominator counts all primes in [floor, c].
    n and ell label the ambient family but never change the counts, which
    depend on divisibility in the integers alone.
    """
    if n < 1 or ell < 1:
        raise ValueError("n and ell must be at least 1")
    floor, selector = _KIND_RULES[kind]
    rows = []
    for c in c_list:
        primes = [p for p in prime_sieve(max(c, 0), sieve_cap=sieve_cap) if p >= floor]
        denominator = len(primes)
        if selector is Selector.NOT_DIVIDES_C:
            numerator = sum(1 for p in primes if c % p != 0)
        elif selector is Selector.DIVIDES_C:
            numerator = sum(1 for p in primes if c % p == 0)
        elif selector is Selector.DIVIDES_C_MINUS_1:
            numerator = sum(1 for p in primes if (c - 1) % p == 0)
        else:
            numerator = sum(1 for p in primes if (c + 1) % p == 0)
        ratio = Fraction(numerator, denominator) if denominator else None
        rows.append(DensityRow(c, kind, numerator, denominator, ratio))
    return rows
