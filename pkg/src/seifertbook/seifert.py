"""
Seifert invariants (g, n; r_1, ..., r_k) with exact rational coefficients.

The eligible class is n <= 0 and r_i = -1/p_i with p_i a positive integer.
This is the class on which the horizontal open book construction and the
plumbing normalization are defined.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import IneligibleError, SchemaError


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class SeifertInvariants:
    genus: int
    euler: int
    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if not _is_int(self.genus) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        if not _is_int(self.euler):
            raise ValueError(f"euler must be an integer, got {self.euler!r}")
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if any(c == 0 for c in coeffs):
            raise ValueError("Seifert coefficients must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def k(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_multiplicities(cls, genus: int, euler: int, ps: Sequence[int]):
        """Build (g, n; -1/p_1, ..., -1/p_k)."""
        return cls(genus, euler, tuple(Fraction(-1, p) for p in ps))

    def multiplicities(self) -> tuple[int, ...]:
        """The p_i with r_i = -1/p_i.  Only meaningful for eligible data."""
        report = validate_eligible(self)
        if not report.eligible:
            raise IneligibleError(f"not in eligible class: {report.describe()}")
        return report.multiplicities

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "euler": self.euler,
            "coefficients": [[c.numerator, c.denominator] for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, doc) -> "SeifertInvariants":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("genus", "euler", "coefficients"):
            if key not in doc:
                raise SchemaError(key, "missing")
        if not _is_int(doc["genus"]) or doc["genus"] < 0:
            raise SchemaError("genus", "expected a non-negative integer")
        if not _is_int(doc["euler"]):
            raise SchemaError("euler", "expected an integer")
        raw = doc["coefficients"]
        if not isinstance(raw, list):
            raise SchemaError("coefficients", "expected a list of [num, den] pairs")
        coeffs = []
        for i, pair in enumerate(raw):
            where = f"coefficients[{i}]"
            if not (isinstance(pair, list) and len(pair) == 2 and all(_is_int(x) for x in pair)):
                raise SchemaError(where, "expected [num, den] with integer entries")
            num, den = pair
            if den <= 0:
                raise SchemaError(where, "denominator must be positive")
            if num == 0:
                raise SchemaError(where, "coefficient must be nonzero")
            if gcd(num, den) != 1:
                raise SchemaError(where, "fraction is not reduced")
            coeffs.append(Fraction(num, den))
        return cls(doc["genus"], doc["euler"], tuple(coeffs))

    def __str__(self):
        rs = ", ".join(str(c) for c in self.coefficients)
        return f"({self.genus}, {self.euler}; {rs})" if rs else f"({self.genus}, {self.euler})"


@dataclass(frozen=True)
class EligibilityReport:
    eligible: bool
    multiplicities: tuple[int, ...] = ()
    reasons: tuple[str, ...] = ()
    offending: tuple[int, ...] = field(default=())

    def describe(self) -> str:
        return "; ".join(self.reasons) if self.reasons else "eligible"

    def __bool__(self):
        return self.eligible


def validate_eligible(inv: SeifertInvariants) -> EligibilityReport:
    reasons = []
    offending = []
    if inv.euler > 0:
        reasons.append("n > 0")
    ps = []
    for i, r in enumerate(inv.coefficients):
        if r.numerator == -1:
            ps.append(r.denominator)
        else:
            offending.append(i)
            reasons.append(f"r[{i}] = {r} is not of the form -1/p with p >= 1")
    if reasons:
        return EligibilityReport(False, (), tuple(reasons), tuple(offending))
    return EligibilityReport(True, tuple(ps))


def canonicalize(inv: SeifertInvariants) -> SeifertInvariants:
    """Absorb every p_i = 1 into the Euler number, keeping the other
    coefficients in their original order."""
    report = validate_eligible(inv)
    if not report:
        raise IneligibleError(f"not in eligible class: {report.describe()}")
    kept = tuple(p for p in report.multiplicities if p != 1)
    absorbed = inv.k - len(kept)
    return SeifertInvariants.from_multiplicities(inv.genus, inv.euler - absorbed, kept)


def rational_euler(inv: SeifertInvariants) -> Fraction:
    return inv.euler + sum(inv.coefficients, Fraction(0))
