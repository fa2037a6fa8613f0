"""Exact discriminants and desk-scale counts for trinomials x^d - x + c.

The discriminant is computed two independent ways: trinomial_disc builds
the full Sylvester matrix of (f, f') and evaluates it with the fraction-free
Bareiss elimination, while closed_form_disc uses the two-term formula the
resultant collapses to for this family.  The test suite proves them equal on
a verification grid before anything downstream relies on the fast form.

Discriminants here are polynomial discriminants, a proxy (up to square
cofactor) for the discriminant of the number field a given trinomial cuts
out; irreducibility over Q is certified, never guessed, with UNKNOWN as a
first-class answer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import stats
from .dynamics import integral_fixed_points
from .ff import _pgcd, _ppowmod, _psub, _trim

__all__ = [
    "ZETA2_INV",
    "IrreducibilityStatus",
    "Trinomial",
    "FieldCountRow",
    "SquarefreeReport",
    "trinomial_disc",
    "closed_form_disc",
    "irreducibility_status",
    "trinomial_row",
    "bounded_trinomials",
    "count_by_disc",
    "count_by_height",
    "squarefree_disc_fraction",
]

# 6 / pi^2, the squarefree density of all integers, shown as a reference
# value next to empirical squarefree-discriminant fractions.
ZETA2_INV = 6 / math.pi**2


class IrreducibilityStatus(enum.Enum):
    REDUCIBLE = "REDUCIBLE"
    IRREDUCIBLE = "IRREDUCIBLE"
    UNKNOWN = "UNKNOWN"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Trinomial:
    """One member x^d - x + c with its exact discriminant and height."""

    d: int
    c: int
    disc: int
    height: float

    @classmethod
    def build(cls, d: int, c: int) -> "Trinomial":
        return cls(d, c, closed_form_disc(d, c), abs(c) ** (1.0 / d))


@dataclass(frozen=True)
class FieldCountRow:
    """Counting result: irreducible trinomials with |disc| below a bound.

    admissible stores (c, status) for every enumerated candidate so the
    count can be reproduced without re-running the enumeration.
    """

    d: int
    X: int
    count: int
    unknown: int
    exponent_ref: Fraction
    constant: float
    bound_ok: bool
    admissible: tuple[tuple[int, str], ...] = ()

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "X": self.X,
            "count": self.count,
            "unknown": self.unknown,
            "exponent_ref": str(self.exponent_ref),
            "bound_ok": self.bound_ok,
        }


@dataclass(frozen=True)
class SquarefreeReport:
    """Empirical squarefree-discriminant fraction next to 6/pi^2."""

    d: int
    limit: int
    squarefree: int
    unknown: int
    fraction: Fraction
    reference: float

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "limit": self.limit,
            "squarefree": self.squarefree,
            "unknown": self.unknown,
            "numerator": self.squarefree,
            "denominator": self.limit,
            "fraction": str(self.fraction),
            "reference": f"{self.reference:.6f}",
        }


def _det_bareiss(m: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination; mutates its copy."""
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def _sylvester(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of f and g, coefficients highest degree first."""
    df = len(f) - 1
    dg = len(g) - 1
    size = df + dg
    rows = []
    for i in range(dg):
        rows.append([0] * i + f + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + g + [0] * (size - dg - 1 - i))
    return rows


def trinomial_disc(d: int, c: int) -> int:
    """Discriminant of x^d - x + c via the Sylvester resultant of (f, f').

    disc = (-1)^(d(d-1)/2) * Res(f, f'), evaluated over exact integers.
    """
    if d < 2:
        raise ValueError(f"degree {d} must be at least 2")
    f = [1] + [0] * (d - 2) + [-1, c]
    fp = [d] + [0] * (d - 2) + [-1]
    res = _det_bareiss(_sylvester(f, fp))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res


def closed_form_disc(d: int, c: int) -> int:
    """The same discriminant by the two-term formula for this family.

    disc = (-1)^(d(d-1)/2) * (d^d c^(d-1) - (d-1)^(d-1)).  Equality with
    trinomial_disc over d <= 10, |c| <= 30 is enforced by the test suite;
    the enumerators below use this form for speed.
    """
    if d < 2:
        raise ValueError(f"degree {d} must be at least 2")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * (d**d * c ** (d - 1) - (d - 1) ** (d - 1))


DEFAULT_Q_MAX = 50


def _irreducible_mod_q(d: int, c: int, q: int) -> bool:
    """Factor-degree certificate for x^d - x + c over F_q.

    Irreducible over F_q exactly when gcd(x^(q^k) - x, f) = 1 for all
    1 <= k <= d // 2; f stays monic of degree d under reduction, so a pass
    certifies irreducibility over Q as well.
    """
    f = _trim([c % q, (q - 1) % q] + [0] * (d - 2) + [1])
    x = (0, 1)
    for k in range(1, d // 2 + 1):
        xqk = _ppowmod(x, q**k, f, q)
        g = _pgcd(f, _psub(xqk, x, q), q)
        if len(g) - 1 != 0:
            return False
    return True


def irreducibility_status(d: int, c: int, *, q_max: int = DEFAULT_Q_MAX) -> IrreducibilityStatus:
    """Certified irreducibility of x^d - x + c over Q; UNKNOWN when unsure.

    REDUCIBLE comes with an integer root (monic integer polynomials have
    integer rational roots) or c = 0; IRREDUCIBLE comes from irreducibility
    modulo some prime q <= q_max.  No heuristic ever upgrades UNKNOWN.
    """
    if d < 2:
        raise ValueError(f"degree {d} must be at least 2")
    if c == 0 or integral_fixed_points(d, c).roots:
        return IrreducibilityStatus.REDUCIBLE
    for q in stats.prime_sieve(q_max):
        if _irreducible_mod_q(d, c, q):
            return IrreducibilityStatus.IRREDUCIBLE
    return IrreducibilityStatus.UNKNOWN


def certifying_prime(d: int, c: int, *, q_max: int = DEFAULT_Q_MAX) -> int | None:
    """The smallest prime q <= q_max with f irreducible mod q, if any."""
    if d < 2:
        raise ValueError(f"degree {d} must be at least 2")
    if c == 0 or integral_fixed_points(d, c).roots:
        return None
    for q in stats.prime_sieve(q_max):
        if _irreducible_mod_q(d, c, q):
            return q
    return None


def bounded_trinomials(d: int, X: int, *, margin: int = 3) -> list[Trinomial]:
    """All trinomials with |disc| < X, ascending in |c| (0, 1, -1, 2, ...).

    |disc| grows monotonically in |c| once d^d |c|^(d-1) dominates, but can
    dip near small c; the enumeration therefore keeps going until margin
    consecutive |c| levels produce nothing.
    """
    if X < 1:
        raise ValueError(f"bound {X} must be at least 1")
    out: list[Trinomial] = []
    misses = 0
    a = 0
    while True:
        level = (0,) if a == 0 else (a, -a)
        hit = False
        for c in level:
            t = Trinomial.build(d, c)
            if abs(t.disc) < X:
                out.append(t)
                hit = True
        if hit:
            misses = 0
        else:
            misses += 1
            if misses >= margin:
                return out
        a += 1


def count_by_disc(
    d: int,
    X: int,
    *,
    constant: float = 4.0,
    q_max: int = DEFAULT_Q_MAX,
) -> FieldCountRow:
    """Count irreducible trinomials with |disc| < X, UNKNOWNs set aside.

    bound_ok records whether count <= constant * X^(d/(2d-2)); the exponent
    is also reported exactly as a Fraction.
    """
    count = 0
    unknown = 0
    admissible = []
    for t in bounded_trinomials(d, X):
        status = irreducibility_status(d, t.c, q_max=q_max)
        admissible.append((t.c, status.value))
        if status is IrreducibilityStatus.IRREDUCIBLE:
            count += 1
        elif status is IrreducibilityStatus.UNKNOWN:
            unknown += 1
    exponent = Fraction(d, 2 * d - 2)
    bound_ok = count <= constant * X ** (d / (2 * d - 2))
    return FieldCountRow(d, X, count, unknown, exponent, constant, bound_ok, tuple(admissible))


def count_by_height(d: int, hmax: float) -> int:
    """#{c integer : |c|^(1/d) <= hmax}, by the closed form 2*floor(hmax^d)+1."""
    if d < 2:
        raise ValueError(f"degree {d} must be at least 2")
    if hmax < 0:
        raise ValueError(f"height bound {hmax} must be nonnegative")
    if float(hmax).is_integer():
        limit = int(hmax) ** d
    else:
        limit = math.floor(float(hmax) ** d)
    return 2 * limit + 1


DEFAULT_TRIAL_BOUND = 10**5


def _squarefree_by_trial(u: int, primes: list[int]) -> bool | None:
    """True/False when decided by trial division, None when out of reach.

    After dividing out every prime <= B once (twice means not squarefree),
    a remainder above 1 with no factor <= B is prime when below B^2; beyond
    that only a perfect square settles the question.
    """
    rem = u
    exhausted = True
    for p in primes:
        if p * p > rem:
            exhausted = False
            break
        if rem % p == 0:
            rem //= p
            if rem % p == 0:
                return False
    if rem == 1 or not exhausted:
        return True
    bound = primes[-1] if primes else 1
    if rem <= bound * bound:
        return True
    r = math.isqrt(rem)
    if r * r == rem:
        return False
    return None


def squarefree_disc_fraction(
    d: int,
    limit: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
) -> SquarefreeReport:
    """Fraction of c in [1, limit] whose |disc| is squarefree.

    A squarefree polynomial discriminant certifies that the ring generated
    by a root is already maximal, the standard sufficient condition for
    monogenicity.  Candidates that trial division up to trial_bound cannot
    settle are counted as unknown, never as squarefree.  The reference
    value 6/pi^2 is carried alongside purely for display; no convergence is
    asserted or checked.
    """
    if limit < 1:
        raise ValueError(f"limit {limit} must be at least 1")
    primes = stats.prime_sieve(trial_bound)
    squarefree = 0
    unknown = 0
    for c in range(1, limit + 1):
        verdict = _squarefree_by_trial(abs(closed_form_disc(d, c)), primes)
        if verdict is True:
            squarefree += 1
        elif verdict is None:
            unknown += 1
    return SquarefreeReport(
        d, limit, squarefree, unknown, Fraction(squarefree, limit), ZETA2_INV
    )


def trinomial_row(d: int, c: int, *, q_max: int = DEFAULT_Q_MAX, trial_bound: int = DEFAULT_TRIAL_BOUND) -> dict:
    """One per-trinomial record for table output."""
    t = Trinomial.build(d, c)
    status = irreducibility_status(d, c, q_max=q_max)
    sf = _squarefree_by_trial(abs(t.disc), stats.prime_sieve(trial_bound))
    return {
        "d": d,
        "c": c,
        "disc": t.disc,
        "height": t.height,
        "irreducibility": status.value,
        "squarefree": "unknown" if sf is None else ("true" if sf else "false"),
    }
