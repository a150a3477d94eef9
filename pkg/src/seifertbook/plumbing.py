"""
Plumbing graphs and the two calculus moves used to put star-shaped
Seifert plumbings into non-positive standard form.

Vertices carry an Euler number and a base genus.  Edges are an unordered
multiset of vertex pairs.  Graphs are immutable: every move returns a new
graph, and fresh vertices get deterministic labels (``x1``, ``x2``, ...,
lowest unused index first) so a transcript replays to the same bytes.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateChainError, IneligibleError, MoveError, SchemaError, TopologyError
from .homology import IntegerMatrix
from .seifert import SeifertInvariants, canonicalize, validate_eligible


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Vertex:
    label: str
    euler: int
    genus: int = 0


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        labels = [v.label for v in vertices]
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be unique")
        for v in vertices:
            if v.genus < 0:
                raise ValueError(f"vertex {v.label!r} has negative genus")
        position = {label: i for i, label in enumerate(labels)}
        edges = []
        for a, b in self.edges:
            if a not in position or b not in position:
                raise ValueError(f"edge ({a!r}, {b!r}) references an unknown vertex")
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            edges.append((a, b) if position[a] < position[b] else (b, a))
        edges.sort(key=lambda e: (position[e[0]], position[e[1]]))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        if vertices and not self._connected():
            raise ValueError("plumbing graph must be connected")

    def _connected(self) -> bool:
        adj = self.adjacency()
        start = self.vertices[0].label
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self.vertices)

    def vertex(self, label: str) -> Vertex:
        for v in self.vertices:
            if v.label == label:
                return v
        raise KeyError(label)

    def adjacency(self) -> dict[str, list[str]]:
        """Neighbour lists, with repeats for multi-edges."""
        adj: dict[str, list[str]] = {v.label: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def valence(self, label: str) -> int:
        return sum((a == label) + (b == label) for a, b in self.edges)

    def edge_multiplicity(self, a: str, b: str) -> int:
        key = frozenset((a, b))
        return sum(1 for e in self.edges if frozenset(e) == key)

    def fresh_label(self, prefix: str = "x") -> str:
        used = set(self.labels)
        i = 1
        while f"{prefix}{i}" in used:
            i += 1
        return f"{prefix}{i}"

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v.label, "euler": v.euler, "genus": v.genus} for v in self.vertices],
            "edges": [[a, b] for a, b in self.edges],
        }

    @classmethod
    def from_json(cls, doc) -> "PlumbingGraph":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("vertices", "edges"):
            if key not in doc:
                raise SchemaError(key, "missing")
        if not isinstance(doc["vertices"], list):
            raise SchemaError("vertices", "expected a list")
        if not isinstance(doc["edges"], list):
            raise SchemaError("edges", "expected a list")
        vertices = []
        for i, rec in enumerate(doc["vertices"]):
            where = f"vertices[{i}]"
            if not isinstance(rec, dict):
                raise SchemaError(where, "expected an object")
            if not isinstance(rec.get("id"), str):
                raise SchemaError(f"{where}.id", "expected a string")
            if not _is_int(rec.get("euler")):
                raise SchemaError(f"{where}.euler", "expected an integer")
            genus = rec.get("genus", 0)
            if not _is_int(genus) or genus < 0:
                raise SchemaError(f"{where}.genus", "expected a non-negative integer")
            vertices.append(Vertex(rec["id"], rec["euler"], genus))
        edges = []
        for i, pair in enumerate(doc["edges"]):
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
                raise SchemaError(f"edges[{i}]", "expected a pair of vertex ids")
            edges.append(tuple(pair))
        try:
            return cls(tuple(vertices), tuple(edges))
        except ValueError as exc:
            raise SchemaError("edges" if "edge" in str(exc) or "loop" in str(exc) else "vertices", str(exc)) from None


def _replace(graph: PlumbingGraph, changes: dict[str, int]) -> list[Vertex]:
    return [Vertex(v.label, v.euler + changes.get(v.label, 0), v.genus) for v in graph.vertices]


# -- construction ---------------------------------------------------------------

def star_from_seifert(inv: SeifertInvariants) -> PlumbingGraph:
    """Central vertex (n, g) joined to a leaf of Euler number p_i for each
    coefficient -1/p_i.  Labels are ``c`` and ``v1`` ... ``vk``."""
    report = validate_eligible(inv)
    if not report:
        raise IneligibleError(f"not in eligible class: {report.describe()}")
    leaves = [Vertex(f"v{i + 1}", p, 0) for i, p in enumerate(report.multiplicities)]
    return PlumbingGraph(
        (Vertex("c", inv.euler, inv.genus), *leaves),
        tuple(("c", leaf.label) for leaf in leaves),
    )


# -- moves ----------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    kind: str  # "blow_up_edge" or "blow_down"
    target: tuple[str, ...]

    def to_json(self) -> dict:
        target = list(self.target) if self.kind == "blow_up_edge" else self.target[0]
        return {"move": self.kind, "target": target}

    @classmethod
    def from_json(cls, doc) -> "Move":
        if not isinstance(doc, dict) or "move" not in doc:
            raise SchemaError("move", "missing")
        if "target" not in doc:
            raise SchemaError("target", "missing")
        kind, target = doc["move"], doc["target"]
        if kind == "blow_up_edge":
            if not (isinstance(target, list) and len(target) == 2 and all(isinstance(x, str) for x in target)):
                raise SchemaError("target", "blow_up_edge needs a pair of vertex ids")
            return cls(kind, tuple(target))
        if kind == "blow_down":
            if not isinstance(target, str):
                raise SchemaError("target", "blow_down needs a vertex id")
            return cls(kind, (target,))
        raise SchemaError("move", f"unknown move {kind!r}")

    def apply(self, graph: PlumbingGraph) -> PlumbingGraph:
        if self.kind == "blow_up_edge":
            return blow_up_edge(graph, self.target)
        return blow_down(graph, self.target[0])


def blow_up_edge(graph: PlumbingGraph, edge: Sequence[str], label: str | None = None) -> PlumbingGraph:
    """Replace one copy of ``edge`` by a new (-1)-vertex joined to both
    endpoints, lowering both endpoint Euler numbers by one."""
    a, b = edge
    if a == b or graph.edge_multiplicity(a, b) == 0:
        raise MoveError(f"no edge between {a!r} and {b!r}")
    new = label or graph.fresh_label()
    if new in graph.labels:
        raise MoveError(f"label {new!r} already in use")
    edges = list(graph.edges)
    edges.remove(next(e for e in edges if set(e) == {a, b}))
    edges += [(a, new), (new, b)]
    vertices = _replace(graph, {a: -1, b: -1}) + [Vertex(new, -1, 0)]
    return PlumbingGraph(tuple(vertices), tuple(edges))


def blow_down(graph: PlumbingGraph, label: str) -> PlumbingGraph:
    """Remove a genus-0 vertex of Euler number +1 or -1 with at most two
    neighbours.  Each neighbour's Euler number moves by minus that sign; two
    neighbours become joined by a new edge."""
    try:
        v = graph.vertex(label)
    except KeyError:
        raise MoveError(f"no vertex {label!r}") from None
    if v.genus != 0:
        raise MoveError(f"vertex {label!r} has genus {v.genus}; only spheres blow down")
    if v.euler not in (1, -1):
        raise MoveError(f"vertex {label!r} has Euler number {v.euler}; need +1 or -1")
    nbrs = graph.adjacency()[label]
    if len(nbrs) > 2:
        raise MoveError(f"vertex {label!r} has valence {len(nbrs)} > 2")
    if len(nbrs) == 2 and nbrs[0] == nbrs[1]:
        raise MoveError(f"vertex {label!r} meets {nbrs[0]!r} twice")
    if len(graph.vertices) == 1:
        raise MoveError("cannot blow down the only vertex")
    changes = Counter()
    for w in nbrs:
        changes[w] -= v.euler
    vertices = [u for u in _replace(graph, changes) if u.label != label]
    edges = [e for e in graph.edges if label not in e]
    if len(nbrs) == 2:
        edges.append((nbrs[0], nbrs[1]))
    return PlumbingGraph(tuple(vertices), tuple(edges))


def replay(graph: PlumbingGraph, transcript: Iterable[Move]) -> PlumbingGraph:
    for move in transcript:
        graph = move.apply(graph)
    return graph


# -- star structure -------------------------------------------------------------

@dataclass(frozen=True)
class Star:
    center: str
    branches: tuple[tuple[str, ...], ...]


def default_center(graph: PlumbingGraph) -> str:
    """The positive-genus vertex if there is one, else the first vertex."""
    if not graph.vertices:
        raise TopologyError("empty graph has no center")
    positive = [v.label for v in graph.vertices if v.genus > 0]
    if len(positive) > 1:
        raise TopologyError("more than one vertex has positive genus")
    return positive[0] if positive else graph.vertices[0].label


def star_decomposition(graph: PlumbingGraph, center: str | None = None) -> Star:
    """Split a star-shaped graph into its center and linear branches.

    Branches are listed in the order their first vertex appears among the
    center's edges, and each branch is read outward from the center.
    Raises TopologyError when the graph is not a star about ``center``.
    """
    if center is None:
        center = default_center(graph)
    adj = graph.adjacency()
    if center not in adj:
        raise TopologyError(f"no vertex {center!r}")
    if any(v.genus > 0 for v in graph.vertices if v.label != center):
        raise TopologyError("a non-central vertex has positive genus")
    seen = {center}
    branches = []
    for first in adj[center]:
        if first in seen:
            raise TopologyError(f"{first!r} is reached twice: not a tree")
        branch = [first]
        seen.add(first)
        prev, cur = center, first
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if len(adj[cur]) > 2 or len(nxt) != len(adj[cur]) - 1:
                raise TopologyError(f"branch vertex {cur!r} is not on a simple chain")
            if not nxt:
                break
            (step,) = nxt
            if step in seen:
                raise TopologyError(f"{step!r} is reached twice: not a tree")
            seen.add(step)
            branch.append(step)
            prev, cur = cur, step
        branches.append(tuple(branch))
    if len(seen) != len(graph.vertices):
        raise TopologyError("graph is not connected")
    return Star(center, tuple(branches))


def branch_chains(graph: PlumbingGraph, center: str | None = None) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Central Euler number and the Euler numbers along each branch."""
    star = star_decomposition(graph, center)
    euler = {v.label: v.euler for v in graph.vertices}
    return euler[star.center], tuple(tuple(euler[x] for x in b) for b in star.branches)


def is_nonpositive_standard(graph: PlumbingGraph) -> bool:
    if not graph.vertices:
        return False
    positive = [v.label for v in graph.vertices if v.genus > 0]
    if len(positive) > 1:
        return False
    candidates = positive or list(graph.labels)
    euler = {v.label: v.euler for v in graph.vertices}
    for center in candidates:
        try:
            star = star_decomposition(graph, center)
        except TopologyError:
            continue
        if all(euler[x] <= -2 for b in star.branches for x in b) and euler[center] + len(star.branches) <= 0:
            return True
    return False


# -- algebra --------------------------------------------------------------------

def linking_matrix(graph: PlumbingGraph) -> IntegerMatrix:
    index = {label: i for i, label in enumerate(graph.labels)}
    n = len(index)
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(graph.vertices):
        rows[i][i] = v.euler
    for a, b in graph.edges:
        rows[index[a]][index[b]] += 1
        rows[index[b]][index[a]] += 1
    return IntegerMatrix.from_rows(rows, cols=n)


def branch_continued_fraction(chain: Sequence[int]) -> Fraction:
    """[a_1, ..., a_s] = a_1 - 1/(a_2 - 1/(... - 1/a_s)), read from the
    center outward."""
    if not chain:
        raise ValueError("chain must be nonempty")
    value = Fraction(chain[-1])
    for a in reversed(chain[:-1]):
        if value == 0:
            raise DegenerateChainError(f"degenerate chain {list(chain)}")
        value = a - 1 / value
    return value


def rational_euler_from_graph(graph: PlumbingGraph, center: str | None = None) -> Fraction:
    central, chains = branch_chains(graph, center)
    total = Fraction(central)
    for chain in chains:
        c = branch_continued_fraction(chain)
        if c == 0:
            raise DegenerateChainError(f"branch {list(chain)} has continued fraction 0")
        total -= 1 / c
    return total


# -- normalization --------------------------------------------------------------

@dataclass(frozen=True)
class Normalization:
    initial: PlumbingGraph
    graph: PlumbingGraph
    transcript: tuple[Move, ...]

    def intermediate_graphs(self) -> list[PlumbingGraph]:
        """Every graph along the transcript, starting with ``initial``."""
        out = [self.initial]
        for move in self.transcript:
            out.append(move.apply(out[-1]))
        return out

    def to_json(self) -> dict:
        return {
            "initial": self.initial.to_json(),
            "graph": self.graph.to_json(),
            "transcript": [m.to_json() for m in self.transcript],
        }

    @classmethod
    def from_json(cls, doc) -> "Normalization":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("initial", "graph", "transcript"):
            if key not in doc:
                raise SchemaError(key, "missing")
        if not isinstance(doc["transcript"], list):
            raise SchemaError("transcript", "expected a list")
        return cls(
            PlumbingGraph.from_json(doc["initial"]),
            PlumbingGraph.from_json(doc["graph"]),
            tuple(Move.from_json(m) for m in doc["transcript"]),
        )


def normalize_to_standard(inv: SeifertInvariants) -> Normalization:
    """Run the star-to-standard procedure with explicit moves.

    1. blow down every (+1)-leaf (these are the p_i = 1 coefficients);
    2. blow up every edge at the center, giving branches (n'-k', -1, p_i-1);
    3. on branch i blow up the edge between the -1 and the end vertex until
       the end vertex reaches +1, i.e. p_i - 2 more times;
    4. blow down that +1, leaving p_i - 1 vertices of Euler number -2.
    """
    report = validate_eligible(inv)
    if not report:
        raise IneligibleError(f"not in eligible class: {report.describe()}")
    start = star_from_seifert(inv)
    graph = start
    moves: list[Move] = []

    def do(move: Move):
        nonlocal graph
        graph = move.apply(graph)
        moves.append(move)

    leaves = [f"v{i + 1}" for i in range(inv.k)]
    kept = []
    for leaf, p in zip(leaves, report.multiplicities):
        if p == 1:
            do(Move("blow_down", (leaf,)))
        else:
            kept.append(leaf)

    middles = {}
    for leaf in kept:
        do(Move("blow_up_edge", ("c", leaf)))
        middles[leaf] = graph.vertices[-1].label

    for leaf in kept:
        while graph.vertex(leaf).euler > 1:
            do(Move("blow_up_edge", (middles[leaf], leaf)))
            middles[leaf] = graph.vertices[-1].label
        do(Move("blow_down", (leaf,)))

    return Normalization(start, graph, tuple(moves))


def standard_shape(inv: SeifertInvariants) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """The expected (central Euler number, branch chains) of the normalized
    graph, computed directly from the canonical invariants."""
    canon = canonicalize(inv)
    ps = canon.multiplicities()
    return canon.euler - len(ps), tuple((-2,) * (p - 1) for p in ps)
