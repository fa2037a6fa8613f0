"""Exact arithmetic in prime fields F_p and extension fields F_{p^n}.

F_{p^n} is realised concretely as F_p[t]/(pi) with pi the lexicographically
least monic irreducible polynomial of degree n, so identical parameters
always build identical fields and every downstream census is reproducible
bit for bit.  Such a field is the standing model for the residue ring of a
degree-n number ring at a prime that stays inert.

Everything in this module is immutable and every operation is a pure
function, so FieldSpec and FFElement values can be shared freely across
parallel workers.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "DEFAULT_FIELD_CAP",
    "CapError",
    "FieldCapError",
    "is_prime",
    "render_poly",
    "FpPoly",
    "certify_irreducible",
    "find_irreducible",
    "FieldSpec",
    "FFElement",
    "standard_field",
    "FieldOps",
    "field_ops",
]

# Refuse, never truncate: exhaustive scans over more elements than this are
# rejected with FieldCapError unless the caller raises the cap explicitly.
DEFAULT_FIELD_CAP = 10**7


class CapError(ValueError):
    """A requested computation exceeds a configured resource cap."""


class FieldCapError(CapError):
    """The field order p^n exceeds the exhaustive-scan cap."""


# Witness set making Miller-Rabin deterministic for all inputs below 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(u: int) -> bool:
    """Primality test, deterministic for every u < 2**64."""
    if u < 2:
        return False
    for w in _MR_WITNESSES:
        if u == w:
            return True
        if u % w == 0:
            return False
    d = u - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for w in _MR_WITNESSES:
        x = pow(w, d, u)
        if x == 1 or x == u - 1:
            continue
        for _ in range(s - 1):
            x = x * x % u
            if x == u - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over F_p on plain tuples, lowest degree first,
# trimmed (no trailing zeros; the zero polynomial is the empty tuple).  These
# helpers are the workhorse layer under FpPoly, FFElement and the
# irreducibility certificates; they are also reused by sibling modules.

def _trim(cs: Sequence[int]) -> tuple[int, ...]:
    i = len(cs)
    while i > 0 and cs[i - 1] == 0:
        i -= 1
    return tuple(cs[:i])


def _padd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a by b; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial modulus is zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead:
            coef = lead * inv_lead % p
            shift = len(r) - 1 - db
            for k in range(db):
                y = b[k]
                if y:
                    r[shift + k] = (r[shift + k] - coef * y) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return _trim(r)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Monic gcd."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = tuple(x * inv % p for x in a)
    return a


def _ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> tuple[int, ...]:
    """base**e reduced by mod, square and multiply."""
    result: tuple[int, ...] = (1,)
    acc = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), mod, p)
        e >>= 1
        if e:
            acc = _pmod(_pmul(acc, acc, p), mod, p)
    return result


def render_poly(coeffs: Sequence[int]) -> str:
    """Render a coefficient vector (lowest degree first) like "2*t^3+t+1"."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        if k == 0:
            terms.append(str(a))
        else:
            base = "t" if k == 1 else f"t^{k}"
            terms.append(base if a == 1 else f"{a}*{base}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p; coeffs lowest degree first, no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if any(not (0 <= a < self.p) for a in self.coeffs):
            raise ValueError("coefficients must be reduced residues mod p")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use FpPoly.of")

    @classmethod
    def of(cls, p: int, coeffs: Iterable[int]) -> "FpPoly":
        """Build from arbitrary integers, reducing mod p and trimming."""
        return cls(p, _trim([int(a) % p for a in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        return render_poly(self.coeffs)


def certify_irreducible(poly: FpPoly) -> bool:
    """Full irreducibility certificate for a monic polynomial.

    A monic m of degree n >= 1 is irreducible over F_p exactly when
    gcd(t^(p^k) - t, m) = 1 for every 1 <= k <= n // 2: any nontrivial
    factorisation contains a factor of degree at most n // 2, and
    t^(p^k) - t is the product of all monic irreducibles of degree
    dividing k.  Degree 1 passes vacuously.
    """
    if not poly.is_monic:
        return False
    n, p = poly.degree, poly.p
    m = poly.coeffs
    t = (0, 1)
    for k in range(1, n // 2 + 1):
        tpk = _ppowmod(t, p**k, m, p)
        g = _pgcd(m, _psub(tpk, t, p), p)
        if len(g) - 1 != 0:
            return False
    return True


def find_irreducible(p: int, n: int) -> FpPoly:
    """Lexicographically least monic irreducible of degree n over F_p.

    Candidates t^n + a_(n-1) t^(n-1) + ... + a_0 are ordered by the tuple
    (a_(n-1), ..., a_0) and the first one passing the gcd certificate wins,
    so the result is canonical for each (p, n).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"degree {n} must be at least 1")
    for high in itertools.product(range(p), repeat=n):
        coeffs = tuple(reversed(high)) + (1,)
        cand = FpPoly(p, coeffs)
        if certify_irreducible(cand):
            return cand
    raise RuntimeError("unreachable: irreducibles of every degree exist")


@dataclass(frozen=True)
class FieldSpec:
    """A concrete model of F_{p^n}: characteristic, degree and modulus pi.

    Elements are coefficient vectors over the basis 1, t, ..., t^(n-1).
    Construction re-runs the irreducibility certificate, so an invalid
    modulus can never circulate.  Prefer FieldSpec.create or standard_field,
    which pick the canonical lex-least modulus.
    """

    p: int
    n: int
    modulus: FpPoly

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"extension degree {self.n} must be at least 1")
        if self.modulus.p != self.p:
            raise ValueError("modulus characteristic differs from field characteristic")
        if self.modulus.degree != self.n:
            raise ValueError("modulus degree differs from extension degree")
        if not certify_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not irreducible over F_{self.p}")

    @classmethod
    def create(cls, p: int, n: int) -> "FieldSpec":
        return cls(p, n, find_irreducible(p, n))

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def zero(self) -> "FFElement":
        return FFElement(self, (0,) * self.n)

    @property
    def one(self) -> "FFElement":
        return self.from_int(1)

    def from_int(self, c: int) -> "FFElement":
        """Embed an integer through the prime subfield (coordinate 0)."""
        return FFElement(self, (c % self.p,) + (0,) * (self.n - 1))

    def element(self, coeffs: Iterable[int]) -> "FFElement":
        """Build an element from integer coefficients on 1, t, t^2, ...

        Values are reduced mod p; vectors longer than n are reduced by the
        modulus, shorter ones are zero padded.
        """
        cs = [int(a) % self.p for a in coeffs]
        if len(cs) > self.n:
            cs = list(_pmod(tuple(cs), self.modulus.coeffs, self.p))
        return FFElement(self, tuple(cs) + (0,) * (self.n - len(cs)))

    def element_at(self, index: int) -> "FFElement":
        """The index-th element in enumeration order (see elements)."""
        if not (0 <= index < self.order):
            raise ValueError(f"index {index} out of range for field of order {self.order}")
        digits = []
        for _ in range(self.n):
            index, r = divmod(index, self.p)
            digits.append(r)
        return FFElement(self, tuple(digits))

    def elements(self) -> Iterator["FFElement"]:
        """All p^n elements, counting base p with coordinate 0 fastest.

        The order is 0, 1, ..., p-1, t, 1+t, ... and is the fixed
        enumeration contract used by censuses and claim witnesses.
        """
        for i in range(self.order):
            yield self.element_at(i)

    def parse(self, text: str) -> "FFElement":
        """Inverse of str(element); also accepts "-" signs and loose input."""
        powers = _parse_poly_text(text)
        size = max(powers) + 1 if powers else 1
        cs = [0] * size
        for k, a in powers.items():
            cs[k] = a % self.p
        return self.element(cs)

    def as_dict(self) -> dict:
        """Serialisable form: {p, n, modulus coefficient list}."""
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus.coeffs)}

    def __str__(self) -> str:
        return f"F_{self.p}^{self.n}"


def _parse_poly_text(text: str) -> dict[int, int]:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element string")
    s = s.replace("-", "+-")
    parts = [part for part in s.split("+") if part]
    if not parts:
        raise ValueError(f"cannot parse element {text!r}")
    powers: dict[int, int] = {}
    for part in parts:
        sign = 1
        if part.startswith("-"):
            sign = -1
            part = part[1:]
        if "t" in part:
            coef_s, _, pow_s = part.partition("t")
            coef_s = coef_s.rstrip("*")
            coef = int(coef_s) if coef_s else 1
            if pow_s == "":
                k = 1
            elif pow_s.startswith("^"):
                k = int(pow_s[1:])
            else:
                raise ValueError(f"cannot parse term {part!r}")
        else:
            coef = int(part)
            k = 0
        if k < 0:
            raise ValueError(f"negative power in term {part!r}")
        powers[k] = powers.get(k, 0) + sign * coef
    return powers


@dataclass(frozen=True)
class FFElement:
    """An element of a FieldSpec; immutable coefficient vector of length n."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.field.n:
            raise ValueError("coefficient vector length differs from field degree")
        p = self.field.p
        if any(not (0 <= a < p) for a in self.coeffs):
            raise ValueError("coefficients must be reduced residues mod p")

    def _check_same_field(self, other: "FFElement") -> None:
        if self.field != other.field:
            raise ValueError("elements belong to different fields")

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def index(self) -> int:
        """Position in the field's enumeration order (base-p digits)."""
        i = 0
        for a in reversed(self.coeffs):
            i = i * self.field.p + a
        return i

    def __add__(self, other: "FFElement") -> "FFElement":
        self._check_same_field(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FFElement") -> "FFElement":
        self._check_same_field(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FFElement":
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FFElement") -> "FFElement":
        self._check_same_field(other)
        fs = self.field
        rem = _pmod(_pmul(self.coeffs, other.coeffs, fs.p), fs.modulus.coeffs, fs.p)
        return FFElement(fs, rem + (0,) * (fs.n - len(rem)))

    def __pow__(self, e: int) -> "FFElement":
        """Square and multiply; a**0 = 1 for every a, including a = 0."""
        if e < 0:
            raise ValueError("negative exponents are not defined here")
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self) -> "FFElement":
        """The p-power map a -> a^p, the canonical field automorphism."""
        return self ** self.field.p

    def __str__(self) -> str:
        return render_poly(self.coeffs)


@lru_cache(maxsize=None)
def standard_field(p: int, n: int) -> FieldSpec:
    """Cached canonical field with the lex-least modulus."""
    return FieldSpec.create(p, n)


# ---------------------------------------------------------------------------
# Integer-indexed arithmetic engines.  Scan loops work on element indexes
# (the enumeration order) instead of FFElement objects: prime fields use
# direct modular ints, small extensions get flat lookup tables, and larger
# extensions fall back to per-call vector arithmetic.

_TABLE_LIMIT = 512


class FieldOps:
    """Arithmetic on element indexes of one field, built for tight loops.

    Index 0 is always the zero element and index 1 the one element, so
    sparsity tests stay plain truthiness checks.  mul_table and add_table
    are flat q*q lists when present (small fields) and None otherwise;
    inner loops may index them directly.
    """

    mul_table: list[int] | None = None
    add_table: list[int] | None = None

    def __init__(self, fs: FieldSpec):
        self.field = fs
        self.p = fs.p
        self.n = fs.n
        self.q = fs.order

    def encode(self, elem: FFElement) -> int:
        if elem.field != self.field:
            raise ValueError("element belongs to a different field")
        return elem.index

    def decode(self, i: int) -> FFElement:
        return self.field.element_at(i)

    # add, sub, neg, mul are provided by subclasses.

    def pow(self, i: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponents are not defined here")
        result = 1
        mul = self.mul
        while e:
            if e & 1:
                result = mul(result, i)
            e >>= 1
            if e:
                i = mul(i, i)
        return result

    def inv(self, i: int) -> int:
        if i == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(i, self.q - 2)


class _PrimeOps(FieldOps):
    def add(self, i: int, j: int) -> int:
        return (i + j) % self.p

    def sub(self, i: int, j: int) -> int:
        return (i - j) % self.p

    def neg(self, i: int) -> int:
        return -i % self.p

    def mul(self, i: int, j: int) -> int:
        return i * j % self.p


class _TableOps(FieldOps):
    def __init__(self, fs: FieldSpec):
        super().__init__(fs)
        p, n, q = self.p, self.n, self.q
        digits = [tuple(fs.element_at(i).coeffs) for i in range(q)]
        weights = [p**k for k in range(n)]

        def enc(vec: Sequence[int]) -> int:
            return sum(a * w for a, w in zip(vec, weights))

        add_t = [0] * (q * q)
        mul_t = [0] * (q * q)
        mod_c = fs.modulus.coeffs
        for i in range(q):
            di = digits[i]
            for j in range(i, q):
                dj = digits[j]
                s = enc([(a + b) % p for a, b in zip(di, dj)])
                add_t[i * q + j] = add_t[j * q + i] = s
                rem = _pmod(_pmul(di, dj, p), mod_c, p)
                m = enc(rem)
                mul_t[i * q + j] = mul_t[j * q + i] = m
        self.add_table = add_t
        self.mul_table = mul_t
        self.neg_table = [enc([-a % p for a in digits[i]]) for i in range(q)]

    def add(self, i: int, j: int) -> int:
        return self.add_table[i * self.q + j]

    def sub(self, i: int, j: int) -> int:
        return self.add_table[i * self.q + self.neg_table[j]]

    def neg(self, i: int) -> int:
        return self.neg_table[i]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i * self.q + j]


class _VectorOps(FieldOps):
    def _digits(self, i: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.n):
            i, r = divmod(i, p)
            out.append(r)
        return out

    def _enc(self, vec: Sequence[int]) -> int:
        i = 0
        for a in reversed(list(vec)):
            i = i * self.p + a
        return i

    def add(self, i: int, j: int) -> int:
        p = self.p
        return self._enc([(a + b) % p for a, b in zip(self._digits(i), self._digits(j))])

    def sub(self, i: int, j: int) -> int:
        p = self.p
        return self._enc([(a - b) % p for a, b in zip(self._digits(i), self._digits(j))])

    def neg(self, i: int) -> int:
        p = self.p
        return self._enc([-a % p for a in self._digits(i)])

    def mul(self, i: int, j: int) -> int:
        fs = self.field
        rem = _pmod(_pmul(tuple(self._digits(i)), tuple(self._digits(j)), self.p), fs.modulus.coeffs, self.p)
        return self._enc(list(rem) + [0] * (self.n - len(rem)))


@lru_cache(maxsize=64)
def field_ops(fs: FieldSpec) -> FieldOps:
    if fs.n == 1:
        return _PrimeOps(fs)
    if fs.order <= _TABLE_LIMIT:
        return _TableOps(fs)
    return _VectorOps(fs)
