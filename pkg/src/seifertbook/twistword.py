"""
Formal Dehn twist words.

A word is a sequence of letters ``(curve, exponent)``.  No mapping class
group word problem is solved here: two words are considered equal only
modulo an explicit rewrite system made of

* free reduction (merging and cancelling powers of the same curve),
* transposition of neighbouring letters whose curves are declared disjoint,
* lantern rewrites ``a b c d <-> x y z`` for declared configurations.

The first two generate a partially commutative (right-angled Artin) group,
so equivalence under them is decided exactly by :func:`normal_form`.
Lantern rewrites are never applied automatically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import RewriteError, SchemaError

Letter = tuple[str, int]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class LanternConfig:
    boundary: tuple[str, str, str, str]
    interior: tuple[str, str, str]

    def __post_init__(self):
        if len(self.boundary) != 4 or len(self.interior) != 3:
            raise ValueError("a lantern has four boundary curves and three interior curves")
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "interior", tuple(self.interior))

    def to_json(self) -> dict:
        return {"boundary": list(self.boundary), "interior": list(self.interior)}

    def __str__(self):
        return f"({' '.join(self.boundary)} | {' '.join(self.interior)})"


def _pair(a: str, b: str) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class TwistWord:
    """Letters are kept exactly as given (only zero exponents are refused);
    call :meth:`free_reduce` for the merged form.  The provenance log does
    not take part in equality."""

    letters: tuple[Letter, ...] = ()
    declared_disjoint: frozenset = frozenset()
    lantern_configs: tuple[LanternConfig, ...] = ()
    log: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        letters = tuple((str(c), int(e)) for c, e in self.letters)
        if any(e == 0 for _, e in letters):
            raise ValueError("twist exponents must be nonzero")
        pairs = set()
        for p in self.declared_disjoint:
            p = frozenset(p)
            if len(p) != 2:
                raise ValueError(f"disjointness needs two distinct curves, got {sorted(p)}")
            pairs.add(p)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "declared_disjoint", frozenset(pairs))
        object.__setattr__(self, "lantern_configs", tuple(self.lantern_configs))

    @classmethod
    def parse(cls, text: str, disjoint: Iterable[Sequence[str]] = (), lanterns=()) -> "TwistWord":
        """Parse ``"a b^-1 c^3"``; whitespace separates letters."""
        letters = []
        for token in text.split():
            curve, _, power = token.partition("^")
            if not curve:
                raise ValueError(f"bad letter {token!r}")
            letters.append((curve, int(power) if power else 1))
        return cls(tuple(letters), frozenset(_pair(*p) for p in disjoint), tuple(lanterns))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(c if e == 1 else f"{c}^{e}" for c, e in self.letters) or "1"

    @property
    def curves(self) -> set[str]:
        return {c for c, _ in self.letters}

    def commutes(self, a: str, b: str) -> bool:
        return a == b or _pair(a, b) in self.declared_disjoint

    def with_letters(self, letters: Iterable[Letter], note: str | None = None) -> "TwistWord":
        log = self.log + (note,) if note else self.log
        return TwistWord(tuple(letters), self.declared_disjoint, self.lantern_configs, log)

    def with_disjoint(self, pairs: Iterable[Sequence[str]]) -> "TwistWord":
        extra = {frozenset(p) for p in pairs}
        extra = {p for p in extra if len(p) == 2}
        return TwistWord(self.letters, self.declared_disjoint | extra, self.lantern_configs, self.log)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(
            self.letters + other.letters,
            self.declared_disjoint | other.declared_disjoint,
            self.lantern_configs + tuple(c for c in other.lantern_configs if c not in self.lantern_configs),
            self.log + other.log,
        )

    # -- reduction ----------------------------------------------------------

    def free_reduce(self) -> "TwistWord":
        """Merge adjacent powers of the same curve and drop the ones that
        cancel."""
        out: list[list] = []
        for c, e in self.letters:
            if out and out[-1][0] == c:
                out[-1][1] += e
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([c, e])
        return self.with_letters(tuple((c, e) for c, e in out))

    def reduce(self) -> "TwistWord":
        """Free reduction across declared-disjoint letters: two powers of
        the same curve are merged whenever everything between them
        commutes with that curve."""
        letters = [list(x) for x in self.free_reduce().letters]
        changed = True
        while changed:
            changed = False
            for i in range(len(letters)):
                c = letters[i][0]
                for j in range(i + 1, len(letters)):
                    d = letters[j][0]
                    if d == c:
                        letters[i][1] += letters[j][1]
                        del letters[j]
                        if letters[i][1] == 0:
                            del letters[i]
                        changed = True
                        break
                    if not self.commutes(c, d):
                        break
                if changed:
                    break
        return self.with_letters(tuple((c, e) for c, e in letters))

    def normal_form(self) -> tuple[Letter, ...]:
        """Canonical representative of the word's class under free reduction
        and declared transpositions: the lexicographically least shuffle of
        the fully reduced word."""
        rest = list(self.reduce().letters)
        out = []
        while rest:
            best = None
            for j, (c, e) in enumerate(rest):
                if all(self.commutes(c, rest[i][0]) for i in range(j)):
                    if best is None or (c, e) < rest[best]:
                        best = j
            out.append(rest.pop(best))
        return tuple(out)

    def equivalent(self, other: "TwistWord") -> bool:
        """Equality modulo free reduction and the union of both words'
        declared transpositions."""
        rel = self.declared_disjoint | other.declared_disjoint
        a = TwistWord(self.letters, rel)
        b = TwistWord(other.letters, rel)
        return a.normal_form() == b.normal_form()

    def to_json(self) -> list:
        return [[c, e] for c, e in self.letters]

    @classmethod
    def from_json(cls, doc, field_name: str = "word") -> "TwistWord":
        if not isinstance(doc, list):
            raise SchemaError(field_name, "expected a list of [curve, exponent] pairs")
        letters = []
        for i, pair in enumerate(doc):
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], str) and _is_int(pair[1])):
                raise SchemaError(f"{field_name}[{i}]", "expected [curve, exponent]")
            if pair[1] == 0:
                raise SchemaError(f"{field_name}[{i}]", "exponent must be nonzero")
            letters.append((pair[0], pair[1]))
        return cls(tuple(letters))

    def context_to_json(self) -> dict:
        """Letters together with the declared relations."""
        return {
            "word": self.to_json(),
            "disjoint": sorted(sorted(p) for p in self.declared_disjoint),
            "lanterns": [c.to_json() for c in self.lantern_configs],
        }

    @classmethod
    def context_from_json(cls, doc) -> "TwistWord":
        if not isinstance(doc, dict) or "word" not in doc:
            raise SchemaError("word", "missing")
        word = cls.from_json(doc["word"])
        pairs = doc.get("disjoint", [])
        if not isinstance(pairs, list):
            raise SchemaError("disjoint", "expected a list of curve pairs")
        for i, p in enumerate(pairs):
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) and p[0] != p[1]):
                raise SchemaError(f"disjoint[{i}]", "expected two distinct curve names")
        lanterns = []
        raw = doc.get("lanterns", [])
        if not isinstance(raw, list):
            raise SchemaError("lanterns", "expected a list")
        for i, rec in enumerate(raw):
            where = f"lanterns[{i}]"
            if not isinstance(rec, dict):
                raise SchemaError(where, "expected {boundary, interior}")
            b, x = rec.get("boundary"), rec.get("interior")
            if not (isinstance(b, list) and len(b) == 4 and all(isinstance(s, str) for s in b)):
                raise SchemaError(f"{where}.boundary", "expected four curve names")
            if not (isinstance(x, list) and len(x) == 3 and all(isinstance(s, str) for s in x)):
                raise SchemaError(f"{where}.interior", "expected three curve names")
            lanterns.append(LanternConfig(tuple(b), tuple(x)))
        return cls(word.letters, frozenset(_pair(*p) for p in pairs), tuple(lanterns))


def word_exponent_vector(w: TwistWord) -> dict[str, int]:
    totals: dict[str, int] = {}
    for c, e in w.letters:
        totals[c] = totals.get(c, 0) + e
    return {c: e for c, e in sorted(totals.items()) if e}


def _gather(w: TwistWord, pattern: Sequence[str], position: int) -> list[Letter] | None:
    """Bring the letters ``pattern`` (each with exponent +1) to
    ``position, position+1, ...`` using declared transpositions only.
    Returns the rearranged letter list or None."""
    letters = list(w.letters)
    cur = position
    for target in pattern:
        j = cur
        while j < len(letters):
            c, e = letters[j]
            if c == target and e == 1:
                break
            if not w.commutes(c, target):
                return None
            j += 1
        else:
            return None
        letters.insert(cur, letters.pop(j))
        cur += 1
    return letters


def lantern_rewrite(w: TwistWord, config: LanternConfig, position: int, inverse: bool = False) -> TwistWord:
    """Replace ``t_a t_b t_c t_d`` at ``position`` by ``t_x t_y t_z``
    (or the reverse when ``inverse`` is set)."""
    if config not in w.lantern_configs:
        raise RewriteError(f"lantern {config} is not declared for this word")
    if not 0 <= position <= len(w.letters):
        raise RewriteError(f"position {position} outside the word")
    pattern, replacement = (config.interior, config.boundary) if inverse else (config.boundary, config.interior)
    gathered = _gather(w, pattern, position)
    if gathered is None:
        raise RewriteError(f"{' '.join(pattern)} does not occur at position {position} of {w}")
    letters = gathered[:position] + [(c, 1) for c in replacement] + gathered[position + len(pattern):]
    note = f"lantern{'^-1' if inverse else ''} {config} at {position}"
    return w.with_letters(letters, note)
