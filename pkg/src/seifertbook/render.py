"""Serialization of library values to JSON, DOT and plain text."""
from __future__ import annotations

import json
from fractions import Fraction

from .homology import AbelianGroup, IntegerMatrix
from .openbook import Classification, OpenBook, SurgeryPresentation
from .plumbing import Normalization, PlumbingGraph
from .seifert import SeifertInvariants

FORMATS = ("json", "dot", "text")


class FormatError(ValueError):
    pass


def to_document(obj):
    """JSON-ready form of a library value (dicts and lists pass through)."""
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, dict):
        return {k: to_document(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_document(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_document(obj), sort_keys=True, indent=2) + "\n"


def _dot_id(label: str) -> str:
    return json.dumps(label)


def graph_to_dot(graph: PlumbingGraph, name: str = "plumbing") -> str:
    lines = [f"graph {name} {{"]
    for v in graph.vertices:
        lines.append(f'  {_dot_id(v.label)} [label="e={v.euler}, g={v.genus}"];')
    for a, b in graph.edges:
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fraction(q: Fraction) -> str:
    return str(q)


def _text_graph(graph: PlumbingGraph) -> list[str]:
    out = [f"  {v.label}: e={v.euler} g={v.genus}" for v in graph.vertices]
    out += [f"  {a} -- {b}" for a, b in graph.edges]
    return out


def to_text(obj) -> str:
    if isinstance(obj, Normalization):
        lines = ["initial graph:", *_text_graph(obj.initial), "moves:"]
        for i, m in enumerate(obj.transcript, 1):
            lines.append(f"  {i}. {m.kind} {' '.join(m.target)}")
        lines += ["standard graph:", *_text_graph(obj.graph)]
    elif isinstance(obj, PlumbingGraph):
        lines = _text_graph(obj)
    elif isinstance(obj, SeifertInvariants):
        lines = [str(obj)]
    elif isinstance(obj, OpenBook):
        lines = [
            f"page genus: {obj.page_genus}",
            f"boundary components: {obj.boundary_count}",
            f"boundary exponents: {' '.join(map(str, obj.boundary_exponents))}",
            f"extra word: {obj.extra_word}",
        ]
    elif isinstance(obj, Classification):
        lines = [f"{'yes' if v else 'no ':3} {k}" for k, v in obj.to_json().items()]
    elif isinstance(obj, SurgeryPresentation):
        lines = [
            f"base: genus {obj.base.page_genus}, boundary exponents {' '.join(map(str, obj.base.boundary_exponents))}",
            "surgeries:",
        ]
        lines += [f"  ({'+1' if s > 0 else '-1'}) on {c}" for c, s in obj.surgeries] or ["  none"]
    elif isinstance(obj, AbelianGroup):
        lines = [str(obj)]
    elif isinstance(obj, IntegerMatrix):
        lines = [" ".join(f"{x:>4}" for x in row) for row in obj.entries]
    elif isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, Fraction):
                v = _fraction(v)
            elif hasattr(v, "to_json") and not isinstance(v, AbelianGroup):
                v = json.dumps(v.to_json(), sort_keys=True)
            lines.append(f"{k}: {v}")
    else:
        lines = [str(obj)]
    return "\n".join(lines) + "\n"


def emit(obj, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(obj)
    if fmt == "dot":
        if isinstance(obj, Normalization):
            return graph_to_dot(obj.graph)
        if isinstance(obj, PlumbingGraph):
            return graph_to_dot(obj)
        raise FormatError(f"DOT output is only available for plumbing graphs, not {type(obj).__name__}")
    if fmt == "text":
        if hasattr(obj, "render_text"):
            return obj.render_text()
        return to_text(obj)
    raise FormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
