"""Independent reference computations used only by the tests."""
from collections import deque
from fractions import Fraction


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def invariant_factors(rows):
    """Nonzero invariant factors via sympy's own Smith normal form."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    if not rows or not rows[0]:
        return []
    d = smith_normal_form(Matrix(rows), domain=ZZ)
    return [abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0]


def continued_fraction_recursive(chain):
    head = Fraction(chain[0])
    if len(chain) == 1:
        return head
    return head - 1 / continued_fraction_recursive(chain[1:])


def transposition_closure(letters, disjoint):
    """Every letter sequence reachable by swapping neighbours whose curves
    are equal or declared disjoint (breadth-first search)."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i][0], w[i + 1][0]
            # powers of one curve commute with each other
            if w[i] != w[i + 1] and (a == b or frozenset((a, b)) in disjoint):
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def naive_reduce(letters):
    out = []
    for c, e in letters:
        if out and out[-1][0] == c:
            s = out[-1][1] + e
            out.pop()
            if s:
                out.append((c, s))
        else:
            out.append((c, e))
    return tuple(out)


def equivalent_by_search(w1, w2, disjoint, max_rounds=20):
    """Decide equivalence under free reduction and transpositions by
    alternating closure and reduction until nothing new appears.  Only
    practical for short words."""

    def saturate(letters):
        frontier = {naive_reduce(letters)}
        seen = set()
        for _ in range(max_rounds):
            new = set()
            for w in frontier:
                for v in transposition_closure(w, disjoint):
                    if v not in seen:
                        seen.add(v)
                        new.add(naive_reduce(v))
            new -= seen
            if not new:
                break
            frontier = new
        return {naive_reduce(w) for w in seen}

    def shortest(words):
        m = min(len(w) for w in words)
        return {w for w in words if len(w) == m}

    return shortest(saturate(w1)) == shortest(saturate(w2))
