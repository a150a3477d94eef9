"""
Cross-module invariance suite.

Each property is evaluated on every case; a case only touches immutable
values, so cases are independent and results are aggregated in case order.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .homology import first_homology
from .openbook import construct_horizontal_open_book, seifert_from_boundary_word
from .plumbing import (
    blow_down,
    blow_up_edge,
    branch_chains,
    is_nonpositive_standard,
    normalize_to_standard,
    rational_euler_from_graph,
    replay,
    standard_shape,
    star_from_seifert,
)
from .seifert import SeifertInvariants, canonicalize, rational_euler, validate_eligible

PROPERTIES = (
    "eligible",
    "canonical_form",
    "shape_law",
    "standard_form",
    "transcript_replay",
    "homology_invariance",
    "euler_agreement",
    "blow_up_inverse",
    "open_book_round_trip",
)


def random_eligible(rng: random.Random, max_genus=3, min_euler=-5, max_k=5, max_p=9) -> SeifertInvariants:
    g = rng.randint(0, max_genus)
    n = rng.randint(min_euler, 0)
    ps = [rng.randint(1, max_p) for _ in range(rng.randint(0, max_k))]
    return SeifertInvariants.from_multiplicities(g, n, ps)


def random_batch(seed: int, cases: int) -> list[SeifertInvariants]:
    rng = random.Random(seed)
    return [random_eligible(rng) for _ in range(cases)]


def check_case(inv: SeifertInvariants) -> dict[str, bool]:
    """Evaluate every property on one eligible input.  A property that
    raises counts as a failure."""
    results = {}

    def record(name, fn):
        try:
            results[name] = bool(fn())
        except Exception:
            results[name] = False

    record("eligible", lambda: validate_eligible(inv).eligible)
    canon = canonicalize(inv)
    record(
        "canonical_form",
        lambda: canonicalize(canon) == canon
        and rational_euler(canon) == rational_euler(inv)
        and all(p > 1 for p in canon.multiplicities()),
    )
    norm = normalize_to_standard(inv)
    record("shape_law", lambda: branch_chains(norm.graph) == standard_shape(inv))
    record("standard_form", lambda: is_nonpositive_standard(norm.graph))
    record("transcript_replay", lambda: replay(norm.initial, norm.transcript) == norm.graph)
    graphs = norm.intermediate_graphs()
    record("homology_invariance", lambda: len({first_homology(g) for g in graphs}) == 1)
    e = rational_euler(inv)
    record("euler_agreement", lambda: all(rational_euler_from_graph(g) == e for g in graphs))

    def inverse_pairs():
        star = star_from_seifert(inv)
        for edge in star.edges:
            up = blow_up_edge(star, edge)
            if blow_down(up, up.vertices[-1].label) != star:
                return False
        return True

    record("blow_up_inverse", inverse_pairs)

    def round_trip():
        if inv.k + abs(inv.euler) == 0:
            return True
        ob = construct_horizontal_open_book(inv)
        if ob.page_genus != inv.genus or ob.boundary_count != inv.k + abs(inv.euler):
            return False
        back = construct_horizontal_open_book(canonicalize(seifert_from_boundary_word(ob.page_genus, ob.boundary_exponents)))
        return back.page_genus == ob.page_genus and Counter(back.boundary_exponents) == Counter(ob.boundary_exponents)

    record("open_book_round_trip", round_trip)
    return results


@dataclass
class CheckReport:
    seed: int | None
    cases: list[SeifertInvariants]
    results: list[dict[str, bool]] = field(default_factory=list)

    def passed(self, prop: str) -> int:
        return sum(r[prop] for r in self.results)

    def first_failure(self, prop: str) -> int | None:
        return next((i for i, r in enumerate(self.results) if not r[prop]), None)

    @property
    def ok(self) -> bool:
        return all(all(r.values()) for r in self.results)

    def to_json(self) -> dict:
        props = {}
        for prop in PROPERTIES:
            bad = self.first_failure(prop)
            props[prop] = {
                "passed": self.passed(prop),
                "total": len(self.results),
                "first_failure": None if bad is None else self.cases[bad].to_json(),
            }
        return {"seed": self.seed, "cases": len(self.cases), "properties": props, "ok": self.ok}

    def render_text(self) -> str:
        lines = [f"seed: {self.seed if self.seed is not None else '-'}", f"cases: {len(self.cases)}"]
        for prop in PROPERTIES:
            n = self.passed(prop)
            status = "PASS" if n == len(self.results) else "FAIL"
            line = f"{status} {prop} {n}/{len(self.results)}"
            bad = self.first_failure(prop)
            if bad is not None:
                line += f"  first failure: {self.cases[bad]}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def run_suite(cases: list[SeifertInvariants], seed: int | None = None) -> CheckReport:
    report = CheckReport(seed, list(cases))
    report.results = [check_case(inv) for inv in cases]
    return report
