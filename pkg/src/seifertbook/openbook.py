"""
Horizontal open books on Seifert fibered 3-manifolds.

The construction: starting from the trivial circle bundle over a closed
genus g surface, do +1 surgery on |n| fibers and -1/r_i = p_i surgery on k
more fibers.  Each surgered fiber becomes a binding component, the page is
the base surface with k + |n| holes, and the monodromy twists p_i times
(once for the |n| unit fibers) around the corresponding boundary component.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import IneligibleError, SchemaError, TopologyError
from .homology import IntegerMatrix
from .seifert import SeifertInvariants, validate_eligible
from .twistword import TwistWord


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class OpenBook:
    page_genus: int
    boundary_exponents: tuple[int, ...]
    extra_word: TwistWord = field(default_factory=TwistWord)

    def __post_init__(self):
        if not _is_int(self.page_genus) or self.page_genus < 0:
            raise ValueError("page genus must be a non-negative integer")
        exps = tuple(int(m) for m in self.boundary_exponents)
        if any(m == 0 for m in exps):
            raise ValueError("boundary exponents must be nonzero")
        object.__setattr__(self, "boundary_exponents", exps)

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_exponents)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.page_genus - self.boundary_count

    def monodromy(self, boundary_symbols: Sequence[str] | None = None) -> TwistWord:
        """Extra word followed by the boundary twists."""
        symbols = boundary_symbols or default_boundary_symbols(self.boundary_count)
        boundary = tuple((s, m) for s, m in zip(symbols, self.boundary_exponents))
        return self.extra_word.with_letters(self.extra_word.letters + boundary)

    def to_json(self) -> dict:
        return {
            "genus": self.page_genus,
            "boundary_exponents": list(self.boundary_exponents),
            "extra_word": self.extra_word.to_json(),
        }

    @classmethod
    def from_json(cls, doc) -> "OpenBook":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("genus", "boundary_exponents"):
            if key not in doc:
                raise SchemaError(key, "missing")
        if not _is_int(doc["genus"]) or doc["genus"] < 0:
            raise SchemaError("genus", "expected a non-negative integer")
        exps = doc["boundary_exponents"]
        if not isinstance(exps, list) or not all(_is_int(m) and m != 0 for m in exps):
            raise SchemaError("boundary_exponents", "expected a list of nonzero integers")
        word = TwistWord.from_json(doc.get("extra_word", []), "extra_word")
        return cls(doc["genus"], tuple(exps), word)


def default_boundary_symbols(r: int) -> tuple[str, ...]:
    return tuple(f"delta{i + 1}" for i in range(r))


def gluing_matrix(p: int) -> IntegerMatrix:
    """Columns are the images of the solid-torus meridian and longitude in
    the (m, l) basis of the fiber-complement boundary."""
    if not _is_int(p) or p < 1:
        raise TopologyError(f"surgery multiplicity must be a positive integer, got {p!r}")
    return IntegerMatrix.from_rows([[p, p * p - 1], [1, p]])


def construct_horizontal_open_book(inv: SeifertInvariants) -> OpenBook:
    negative = [
        i for i, r in enumerate(inv.coefficients) if r > 0 and r.numerator == 1
    ]
    if negative:
        ps = ", ".join(str(-inv.coefficients[i].denominator) for i in negative)
        raise IneligibleError(
            f"multiplicity p = {ps} is negative: the boundary twists would be "
            "left-handed and the open book is not horizontal"
        )
    report = validate_eligible(inv)
    if not report:
        raise IneligibleError(f"not in eligible class: {report.describe()}")
    if inv.k == 0 and inv.euler == 0:
        raise TopologyError("trivial bundle: no binding")
    return OpenBook(inv.genus, (1,) * abs(inv.euler) + report.multiplicities)


def seifert_from_boundary_word(genus: int, exponents: Sequence[int]) -> SeifertInvariants:
    if not exponents:
        raise TopologyError("no boundary components: the open book has no binding")
    bad = [m for m in exponents if m <= 0]
    if bad:
        raise TopologyError(f"boundary exponents must be positive, got {bad}")
    return SeifertInvariants.from_multiplicities(genus, 0, tuple(exponents))


@dataclass(frozen=True)
class Classification:
    seifert_fibered: bool
    horizontal_realizable: bool
    stein_fillable: bool
    tight_incompatible: bool
    exceptional_case: bool

    def to_json(self) -> dict:
        return {
            "seifert_fibered": self.seifert_fibered,
            "horizontal_realizable": self.horizontal_realizable,
            "stein_fillable": self.stein_fillable,
            "tight_incompatible": self.tight_incompatible,
            "exceptional_case": self.exceptional_case,
        }

    @classmethod
    def from_json(cls, doc) -> "Classification":
        keys = ("seifert_fibered", "horizontal_realizable", "stein_fillable", "tight_incompatible", "exceptional_case")
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in keys:
            if not isinstance(doc.get(key), bool):
                raise SchemaError(key, "expected a boolean")
        return cls(*(doc[k] for k in keys))


def classify_boundary_word(genus: int, exponents: Sequence[int]) -> Classification:
    """Flags for the monodromy prod_i t_{delta_i}^{m_i}.

    Any negative exponent gives a non right-veering arc, hence no tight
    compatible structure, except on the disk and the annulus (g = 0,
    r <= 2) where that argument does not apply; those are flagged as
    exceptional and tightness is left undecided.
    """
    if any(m == 0 for m in exponents):
        raise TopologyError("boundary exponents must be nonzero")
    positive = all(m > 0 for m in exponents)
    exceptional = not positive and genus == 0 and len(exponents) in (1, 2)
    return Classification(
        seifert_fibered=True,
        horizontal_realizable=positive,
        stein_fillable=positive,
        tight_incompatible=not positive and not exceptional,
        exceptional_case=exceptional,
    )


def contact_fiber_pairing(a: int, b: int, radius) -> Fraction:
    """Value of the contact form dz + r^2 dtheta on the fiber direction
    a d/dtheta + b d/dz at radius r."""
    if not _is_int(a) or not _is_int(b) or a < 1 or b < 1:
        raise TopologyError(f"fiber slope components must be positive integers, got ({a!r}, {b!r})")
    r = Fraction(radius)
    return a * r * r + b


def positive_stabilization(ob: OpenBook, symbol: str | None = None) -> OpenBook:
    """Add a 1-handle to the page and a right-handed twist along a curve
    through it.  ``symbol`` names the new curve; by default the first unused
    ``s1``, ``s2``, ... is taken."""
    if symbol is None:
        used = ob.extra_word.curves | set(default_boundary_symbols(ob.boundary_count))
        i = 1
        while f"s{i}" in used:
            i += 1
        symbol = f"s{i}"
    word = ob.extra_word.with_letters(ob.extra_word.letters + ((symbol, 1),), f"stabilize {symbol}")
    return OpenBook(ob.page_genus + 1, ob.boundary_exponents, word)


@dataclass(frozen=True)
class SurgeryPresentation:
    """A boundary-twist open book plus Legendrian surgery curves.

    Sign -1 is a contact (-1)-surgery (a right-handed twist), +1 a contact
    (+1)-surgery (a left-handed twist).
    """

    base: OpenBook
    surgeries: tuple[tuple[str, int], ...]
    boundary_symbols: tuple[str, ...] = ()
    relations: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if any(s not in (1, -1) for _, s in self.surgeries):
            raise ValueError("surgery signs must be +1 or -1")
        object.__setattr__(self, "surgeries", tuple((str(c), int(s)) for c, s in self.surgeries))
        if not self.boundary_symbols:
            object.__setattr__(self, "boundary_symbols", default_boundary_symbols(self.base.boundary_count))

    def recombine(self) -> TwistWord:
        """Surgery letters (sign mapped back to a twist exponent) followed by
        the boundary word."""
        letters = tuple((c, -s) for c, s in self.surgeries)
        boundary = tuple(zip(self.boundary_symbols, self.base.boundary_exponents))
        return TwistWord(letters + boundary, self.relations)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "surgeries": [[c, s] for c, s in self.surgeries]}

    @classmethod
    def from_json(cls, doc) -> "SurgeryPresentation":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("base", "surgeries"):
            if key not in doc:
                raise SchemaError(key, "missing")
        base = OpenBook.from_json(doc["base"])
        raw = doc["surgeries"]
        if not isinstance(raw, list):
            raise SchemaError("surgeries", "expected a list")
        for i, pair in enumerate(raw):
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], str) and pair[1] in (1, -1)
                    and not isinstance(pair[1], bool)):
                raise SchemaError(f"surgeries[{i}]", "expected [curve, +1 or -1]")
        return cls(base, tuple(tuple(p) for p in raw))


def surgery_presentation(
    genus: int,
    boundary_count: int,
    word: TwistWord,
    boundary_symbols: Sequence[str] | None = None,
) -> SurgeryPresentation:
    """Split ``word`` into its boundary part psi and the remaining letters.

    Boundary-parallel curves are disjoint from every other curve, so all
    boundary letters are collected into psi.  A boundary with total exponent
    zero gets a canceling pair: one twist goes to psi and its inverse is
    emitted as a (+1)-surgery.  Every other letter t_c^m becomes |m|
    surgeries on c.
    """
    if boundary_count < 1:
        raise TopologyError("the page needs at least one boundary component")
    symbols = tuple(boundary_symbols or default_boundary_symbols(boundary_count))
    if len(symbols) != boundary_count or len(set(symbols)) != boundary_count:
        raise TopologyError("need one distinct symbol per boundary component")
    totals = dict.fromkeys(symbols, 0)
    surgeries = []
    for c, e in word.letters:
        if c in totals:
            totals[c] += e
        else:
            surgeries.extend([(c, -1 if e > 0 else 1)] * abs(e))
    exponents = []
    for s in symbols:
        if totals[s] == 0:
            exponents.append(1)
            surgeries.append((s, 1))
        else:
            exponents.append(totals[s])
    curves = word.curves | set(symbols)
    relations = word.declared_disjoint | {frozenset((s, c)) for s in symbols for c in curves if c != s}
    return SurgeryPresentation(OpenBook(genus, tuple(exponents)), tuple(surgeries), symbols, frozenset(relations))
