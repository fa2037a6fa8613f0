"""Registry of encoded fixed-point counting claims and their checker.

Each claim predicts the exact fixed-point count of z -> z^d + c on
F_{p^n} from the residue class of c alone, for one family of degrees and
one slice of (p, n, ell).  The checker takes a claim at face value and
scans every residue of the field against the prediction: a mismatch is
data, reported as a witness, never repaired.  Claims whose statements rest
on an auxiliary hypothesis are flagged conditional, and their failures are
expected output, not bugs.

Residues outside a claim's stated classes are never judged; their observed
counts are reported separately as informational material.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from . import dynamics, ff
from .dynamics import DEFAULT_EXP_CAP, Family
from .ff import DEFAULT_FIELD_CAP

__all__ = [
    "Verdict",
    "Witness",
    "PointResult",
    "ClaimSpec",
    "ClaimReport",
    "registry",
    "claim_by_id",
    "check",
    "check_point",
    "check_all",
]


class Verdict(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    NOT_APPLICABLE = "NOT-APPLICABLE"
    SKIPPED = "SKIPPED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    """One concrete counterexample: a coefficient and both counts."""

    c: ff.FFElement
    predicted: int
    actual: int

    def as_dict(self) -> dict:
        return {"c": str(self.c), "predicted": self.predicted, "actual": self.actual}


@dataclass(frozen=True)
class PointResult:
    """Outcome of one claim at one grid point (p, n, ell)."""

    p: int
    n: int
    ell: int
    status: Verdict
    witnesses: tuple[Witness, ...] = ()
    # (observed count, how many unjudged residues showed it), sorted
    unspecified_counts: tuple[tuple[int, int], ...] = ()
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "p": self.p,
            "n": self.n,
            "ell": self.ell,
            "status": self.status.value,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if self.unspecified_counts:
            out["unspecified"] = {str(k): v for k, v in self.unspecified_counts}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class ClaimSpec:
    """One counting claim: applicability slice plus per-class predictions.

    predictions maps residue-class labels to exact counts.  For the
    prime-power family the classes are "0" and "nonzero"; for the pminus1
    family they are "0", "1" and "-1", with everything else unjudged.
    """

    id: str
    family: Family
    statement: str
    conditional: bool
    predictions: tuple[tuple[str, int], ...]
    p_eq: int | None = None
    p_min: int = 2
    n_eq: int | None = None
    n_min: int = 1
    ell_eq: int | None = None
    ell_min: int = 1

    def degree(self, p: int, ell: int) -> int:
        base = p if self.family is Family.PRIME_POWER else p - 1
        return base**ell

    def applies(self, p: int, n: int, ell: int) -> bool:
        if self.p_eq is not None and p != self.p_eq:
            return False
        if p < self.p_min:
            return False
        if self.n_eq is not None and n != self.n_eq:
            return False
        if n < self.n_min:
            return False
        if self.ell_eq is not None and ell != self.ell_eq:
            return False
        return ell >= self.ell_min

    def class_for(self, label: str) -> str | None:
        """Map a census label to this claim's class, or None if unjudged."""
        keys = [k for k, _ in self.predictions]
        if label in keys:
            return label
        if label != "0" and "nonzero" in keys:
            return "nonzero"
        return None

    def prediction(self, label: str) -> int | None:
        for k, v in self.predictions:
            if k == label:
                return v
        return None


@dataclass(frozen=True)
class ClaimReport:
    claim: ClaimSpec
    points: tuple[PointResult, ...]

    @property
    def overall(self) -> Verdict:
        """FAILS if any point fails, else HOLDS if any point held."""
        statuses = {pt.status for pt in self.points}
        if Verdict.FAILS in statuses:
            return Verdict.FAILS
        if Verdict.HOLDS in statuses:
            return Verdict.HOLDS
        if Verdict.SKIPPED in statuses:
            return Verdict.SKIPPED
        return Verdict.NOT_APPLICABLE

    def as_dict(self) -> dict:
        return {
            "claim": self.claim.id,
            "statement": self.claim.statement,
            "conditional": self.claim.conditional,
            "family": self.claim.family.value,
            "classes_checked": [k for k, _ in self.claim.predictions],
            "grid": [pt.as_dict() for pt in self.points],
        }


_N_PREDICTIONS = (("0", 3), ("nonzero", 0))
_M_PREDICTIONS = (("0", 2), ("1", 1), ("-1", 0))

_REGISTRY: tuple[ClaimSpec, ...] = (
    ClaimSpec(
        id="C-2.1",
        family=Family.PRIME_POWER,
        statement=(
            "degree-p map at p = 3 on extensions of degree n >= 2: "
            "3 fixed points when c is in the zero class, otherwise none"
        ),
        conditional=False,
        predictions=_N_PREDICTIONS,
        p_eq=3,
        n_min=2,
        ell_eq=1,
    ),
    ClaimSpec(
        id="C-2.2",
        family=Family.PRIME_POWER,
        statement=(
            "degree-p map, any odd prime p, extensions of degree n >= 2: "
            "3 fixed points when c is in the zero class, otherwise none"
        ),
        conditional=True,
        predictions=_N_PREDICTIONS,
        p_min=3,
        n_min=2,
        ell_eq=1,
    ),
    ClaimSpec(
        id="C-2.3",
        family=Family.PRIME_POWER,
        statement=(
            "degree-p^ell map, any odd prime p and ell >= 1, extensions of "
            "degree n >= 2: 3 fixed points when c is in the zero class, "
            "otherwise none"
        ),
        conditional=True,
        predictions=_N_PREDICTIONS,
        p_min=3,
        n_min=2,
    ),
    ClaimSpec(
        id="C-2.4",
        family=Family.PRIME_POWER,
        statement=(
            "degree-p^ell map on the prime field itself (n = 1), any odd "
            "prime p: 3 fixed points when p divides c, otherwise none"
        ),
        conditional=True,
        predictions=_N_PREDICTIONS,
        p_min=3,
        n_eq=1,
    ),
    ClaimSpec(
        id="C-3.1",
        family=Family.P_MINUS_ONE,
        statement=(
            "degree-4 map at p = 5 on extensions of degree n >= 2: "
            "2 fixed points on the zero class, 1 on the one class, "
            "0 on the minus-one class"
        ),
        conditional=False,
        predictions=_M_PREDICTIONS,
        p_eq=5,
        n_min=2,
        ell_eq=1,
    ),
    ClaimSpec(
        id="C-3.2",
        family=Family.P_MINUS_ONE,
        statement=(
            "degree-(p-1) map, any prime p >= 5, extensions of degree "
            "n >= 2: counts 2, 1, 0 on the classes 0, 1, -1"
        ),
        conditional=False,
        predictions=_M_PREDICTIONS,
        p_min=5,
        n_min=2,
        ell_eq=1,
    ),
    ClaimSpec(
        id="C-3.3",
        family=Family.P_MINUS_ONE,
        statement=(
            "degree-(p-1)^ell map, p >= 5 and ell >= 1, extensions of "
            "degree n >= 2: counts 2, 1, 0 on the classes 0, 1, -1"
        ),
        conditional=False,
        predictions=_M_PREDICTIONS,
        p_min=5,
        n_min=2,
    ),
    ClaimSpec(
        id="C-3.4",
        family=Family.P_MINUS_ONE,
        statement=(
            "degree-(p-1)^ell map on the prime field itself (n = 1), "
            "p >= 5: counts 2, 1, 0 when c is congruent to 0, 1, -1 mod p"
        ),
        conditional=False,
        predictions=_M_PREDICTIONS,
        p_min=5,
        n_eq=1,
    ),
)


def registry() -> list[ClaimSpec]:
    """All encoded claims, in id order."""
    return list(_REGISTRY)


def claim_by_id(claim_id: str) -> ClaimSpec:
    for spec in _REGISTRY:
        if spec.id == claim_id:
            return spec
    raise KeyError(f"unknown claim id {claim_id!r}")


def check_point(
    claim: ClaimSpec,
    p: int,
    n: int,
    ell: int,
    *,
    field_cap: int = DEFAULT_FIELD_CAP,
    exp_cap: int = DEFAULT_EXP_CAP,
) -> PointResult:
    """Evaluate one claim at one grid point by scanning all residues."""
    if not ff.is_prime(p):
        raise ValueError(f"grid point has non-prime p = {p}")
    if n < 1 or ell < 1:
        raise ValueError(f"grid point ({p}, {n}, {ell}) needs n >= 1 and ell >= 1")
    if not claim.applies(p, n, ell):
        return PointResult(p, n, ell, Verdict.NOT_APPLICABLE, note="outside the stated hypotheses")
    d = claim.degree(p, ell)
    if d > exp_cap:
        return PointResult(
            p, n, ell, Verdict.SKIPPED, note=f"degree {d} exceeds the exponent cap {exp_cap}"
        )
    if p**n > field_cap:
        return PointResult(
            p, n, ell, Verdict.SKIPPED, note=f"field order {p}^{n} exceeds the field cap {field_cap}"
        )
    fs = ff.standard_field(p, n)
    profile = dynamics.count_profile(fs, d, field_cap=field_cap, exp_cap=exp_cap)
    witnesses = []
    unjudged: Counter[int] = Counter()
    for idx, actual in enumerate(profile):
        c = fs.element_at(idx)
        cls = claim.class_for(dynamics.classify_residue(fs, c))
        if cls is None:
            unjudged[actual] += 1
            continue
        predicted = claim.prediction(cls)
        if actual != predicted:
            witnesses.append(Witness(c, predicted, actual))
    status = Verdict.FAILS if witnesses else Verdict.HOLDS
    return PointResult(
        p,
        n,
        ell,
        status,
        witnesses=tuple(witnesses),
        unspecified_counts=tuple(sorted(unjudged.items())),
    )


def check(
    claim: str | ClaimSpec,
    grid: Iterable[tuple[int, int, int]],
    *,
    field_cap: int = DEFAULT_FIELD_CAP,
    exp_cap: int = DEFAULT_EXP_CAP,
) -> ClaimReport:
    """Evaluate one claim over a grid of (p, n, ell) points."""
    spec = claim_by_id(claim) if isinstance(claim, str) else claim
    points = tuple(
        check_point(spec, p, n, ell, field_cap=field_cap, exp_cap=exp_cap)
        for p, n, ell in grid
    )
    return ClaimReport(spec, points)


def check_all(
    grid: Iterable[tuple[int, int, int]],
    *,
    field_cap: int = DEFAULT_FIELD_CAP,
    exp_cap: int = DEFAULT_EXP_CAP,
) -> list[ClaimReport]:
    """Every registered claim over the same grid, in registry order."""
    pts = list(grid)
    return [
        check(spec, pts, field_cap=field_cap, exp_cap=exp_cap) for spec in _REGISTRY
    ]
