"""
Exact integer linear algebra: determinants, Smith normal form and the
first homology presented by a linking matrix.

Everything is done with Python integers, so there is no overflow and no
rounding.  Matrices are small (desk scale), so plain nested tuples are used
rather than numpy object arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SchemaError


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntegerMatrix":
        n = len(diag)
        return cls.from_rows(([diag[i] if i == j else 0 for j in range(n)] for i in range(n)), cols=n)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return IntegerMatrix.from_rows(
            ([sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries),
            cols=other.cols,
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * v for a, v in zip(row, vector)) for row in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(tuple(row[j] for row in self.entries) for j in range(self.cols)),
        )

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, row in enumerate(self.entries) for j, v in enumerate(row) if i != j)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, doc) -> "IntegerMatrix":
        if not isinstance(doc, dict):
            raise SchemaError("<root>", "expected a JSON object")
        for key in ("rows", "cols", "entries"):
            if key not in doc:
                raise SchemaError(key, "missing")
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
        if not _is_int(rows) or rows < 0:
            raise SchemaError("rows", "expected a non-negative integer")
        if not _is_int(cols) or cols < 0:
            raise SchemaError("cols", "expected a non-negative integer")
        if not isinstance(entries, list) or len(entries) != rows:
            raise SchemaError("entries", f"expected {rows} rows")
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != cols or not all(_is_int(x) for x in row):
                raise SchemaError(f"entries[{i}]", f"expected {cols} integers")
        return cls(rows, cols, tuple(tuple(r) for r in entries))


def determinant(m: IntegerMatrix) -> int:
    """Fraction-free (Bareiss) elimination with row pivoting."""
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix

    def __iter__(self):
        return iter((self.D, self.U, self.V))


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Return D, U, V with U @ m @ V == D.

    U and V are unimodular and D is diagonal with non-negative entries, each
    dividing the next (zeros last).  The pivot at every stage is the nonzero
    entry of least absolute value in the remaining block, ties going to the
    lowest row index and then the lowest column index, so the output is
    reproducible.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i][j]
                    if x and (pivot is None or abs(x) < pivot[0]):
                        pivot = (abs(x), i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            if p < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            break

    return SmithForm(
        IntegerMatrix.from_rows(a, cols=cols),
        IntegerMatrix.from_rows(u, cols=rows),
        IntegerMatrix.from_rows(v, cols=cols),
    )


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Order of a finite group, None when the rank is positive."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, doc) -> "AbelianGroup":
        if not isinstance(doc, dict) or "rank" not in doc or "torsion" not in doc:
            raise SchemaError("<root>", "expected {rank, torsion}")
        try:
            return cls(doc["rank"], tuple(doc["torsion"]))
        except (TypeError, ValueError) as exc:
            raise SchemaError("torsion", str(exc)) from None


def cokernel(m: IntegerMatrix) -> AbelianGroup:
    """The group Z^rows / image(m)."""
    d = smith_normal_form(m).D.diagonal_entries()
    free = m.rows - sum(1 for x in d if x != 0)
    return AbelianGroup(free, tuple(x for x in d if x >= 2))


def first_homology(graph) -> AbelianGroup:
    """H_1 of the plumbed 3-manifold: the cokernel of the linking matrix
    plus 2g free generators for every vertex of genus g."""
    from .plumbing import linking_matrix

    base = cokernel(linking_matrix(graph))
    return AbelianGroup(base.rank + 2 * sum(v.genus for v in graph.vertices), base.torsion)
