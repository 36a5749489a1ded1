"""Embedding via interval-monotone multicoloured clique.

Given a pattern Q (elements identified with classes 0..k-1), a host P with a
chain partition, and a compatibility function f assigning each pattern
element to a chain, the coloured graph has one class per pattern element
(a copy of the assigned chain, in chain order), and an edge between copies
p of p' and q of q' in distinct classes i, j exactly when

    (p' <=_P q'  iff  i <=_Q j)  and  (q' <=_P p'  iff  j <=_Q i).

Such graphs are interval-monotone: per-class neighbourhoods are intervals of
the class order, and crossing edges force the closing rectangle edges.  That
structure lets a dynamic program find a k-clique (one vertex per class) in
time proportional to k times the edge count, by tabulating per vertex the
coordinatewise-minimum and -maximum cliques over each prefix of classes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NotIntervalMonotone, PreconditionViolation
from .instrument import OpCounter
from .poset import ChainPartition, Poset, is_embedding, width_and_chain_partition


def _row_intervals(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-row neighbour interval [lo, hi] in column order; empty rows get lo > hi.

    Raises NotIntervalMonotone if some row's neighbours are not contiguous.
    """
    m, width = mat.shape
    if m == 0 or width == 0:
        return np.full(m, width, dtype=np.int64), np.full(m, -1, dtype=np.int64)
    nonempty = mat.any(axis=1)
    lo = np.where(nonempty, mat.argmax(axis=1), width).astype(np.int64)
    hi = np.where(nonempty, width - 1 - mat[:, ::-1].argmax(axis=1), -1).astype(np.int64)
    counts = mat.sum(axis=1)
    if not np.array_equal(counts, np.where(nonempty, hi - lo + 1, 0)):
        raise NotIntervalMonotone("a neighbourhood is not an interval of the class order")
    return lo, hi


class ColoredGraph:
    """k ordered colour classes with adjacency between distinct classes only.

    `elements[i]` records the host element underlying each vertex of class i;
    vertices are referred to by their position in their class, which is also
    the class order.  Adjacency between classes i < j is a boolean matrix
    indexed (position in i, position in j).
    """

    def __init__(self, elements: Sequence[Sequence[int]], adjacency: Mapping[tuple[int, int], np.ndarray]):
        self.k = len(elements)
        self.elements = [np.asarray(cls, dtype=np.int64) for cls in elements]
        self._adj: dict[tuple[int, int], np.ndarray] = {}
        for i in range(self.k):
            for j in range(i + 1, self.k):
                mat = np.asarray(adjacency[(i, j)], dtype=bool)
                if mat.shape != (len(self.elements[i]), len(self.elements[j])):
                    raise ValueError(f"adjacency {(i, j)} has shape {mat.shape}")
                self._adj[(i, j)] = mat
        self._ivals: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}

    def class_size(self, i: int) -> int:
        return len(self.elements[i])

    def adjacency(self, i: int, j: int) -> np.ndarray:
        """Adjacency matrix oriented with class-i vertices as rows."""
        if i < j:
            return self._adj[(i, j)]
        return self._adj[(j, i)].T

    def intervals(self, i: int, j: int) -> tuple[np.ndarray, np.ndarray]:
        """Interval bounds of N_j(v) for every v in class i."""
        key = (i, j)
        if key not in self._ivals:
            self._ivals[key] = _row_intervals(self.adjacency(i, j))
        return self._ivals[key]

    def seed_intervals(self, i: int, j: int, lo: np.ndarray, hi: np.ndarray) -> None:
        self._ivals[(i, j)] = (lo, hi)

    def edge_count(self) -> int:
        return sum(int(m.sum()) for m in self._adj.values())


def build_colored_graph(
    q: Poset,
    p: Poset,
    f: Sequence[int],
    cp: ChainPartition,
    counter: OpCounter | None = None,
    cache: dict | None = None,
) -> ColoredGraph:
    """Construct G(P, Q, f) for the given chain partition of the host.

    `cache`, when supplied, memoizes the per-class-pair adjacency and interval
    data across compatibility functions of one embedding run; entries are
    keyed by (host chain pair, pattern relation pair) since nothing else
    enters the edge rule.
    """
    c = counter if counter is not None else OpCounter()
    k = q.n
    classes = [np.asarray(cp.chains[f[i]], dtype=np.int64) for i in range(k)]
    adjacency: dict[tuple[int, int], np.ndarray] = {}
    seeded: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}
    for i in range(k):
        for j in range(i + 1, k):
            qij = bool(q.leq[i, j])
            qji = bool(q.leq[j, i])
            key = (f[i], f[j], qij, qji)
            hit = cache is not None and key in cache
            if hit:
                mat, lo, hi, lo_t, hi_t = cache[key]
                c.add(1)
            else:
                ci, cj = classes[i], classes[j]
                up = p.leq[np.ix_(ci, cj)]
                down = p.leq[np.ix_(cj, ci)].T
                mat = (up == qij) & (down == qji)
                lo, hi = _row_intervals(mat)
                lo_t, hi_t = _row_intervals(mat.T)
                c.add(len(ci) * len(cj))
                if cache is not None:
                    cache[key] = (mat, lo, hi, lo_t, hi_t)
            adjacency[(i, j)] = mat
            seeded[(i, j)] = (lo, hi)
            seeded[(j, i)] = (lo_t, hi_t)
    g = ColoredGraph(classes, adjacency)
    for (i, j), (lo, hi) in seeded.items():
        g.seed_intervals(i, j, lo, hi)
    return g


def is_interval_monotone(g: ColoredGraph) -> bool:
    """Exhaustively decide the two interval-monotonicity conditions.

    Condition (a) -- neighbourhoods are intervals -- is checked as row and
    column contiguity for every class pair.  Given (a), condition (b) -- a
    crossing pair of edges implies the rectangle's other two edges -- holds
    exactly when the interval endpoints are monotone along each class order,
    which is what is checked here (empty neighbourhoods constrain nothing).
    Diagnostic use; the solver assumes these conditions.
    """
    for i in range(g.k):
        for j in range(i + 1, g.k):
            mat = g.adjacency(i, j)
            for m in (mat, mat.T):
                rows, width = m.shape
                if rows == 0 or width == 0:
                    continue
                nonempty = m.any(axis=1)
                lo = m.argmax(axis=1)
                hi = width - 1 - m[:, ::-1].argmax(axis=1)
                counts = m.sum(axis=1)
                if not np.array_equal(counts[nonempty], (hi - lo + 1)[nonempty]):
                    return False
                lo_seq = lo[nonempty]
                hi_seq = hi[nonempty]
                if np.any(np.diff(lo_seq) < 0) or np.any(np.diff(hi_seq) < 0):
                    return False
    return True


def is_clique(g: ColoredGraph, vertices: Mapping[int, int]) -> bool:
    """True iff the given class->position map is pairwise adjacent."""
    classes = sorted(vertices)
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            i, j = classes[a], classes[b]
            if not g.adjacency(i, j)[vertices[i], vertices[j]]:
                return False
    return True


def _require_clique(g: ColoredGraph, vertices: Mapping[int, int], classes: Iterable[int]) -> None:
    if set(vertices) != set(classes):
        raise PreconditionViolation("vertex set does not cover the stated classes")
    if not is_clique(g, vertices):
        raise PreconditionViolation("input vertex set is not a clique")


def clique_min(
    cliques: Sequence[Mapping[int, int]],
    classes: Iterable[int],
    g: ColoredGraph,
    check: bool = True,
) -> dict[int, int]:
    """Coordinatewise class-order minimum of cliques over the same classes.

    For interval-monotone graphs the result is again a clique.
    """
    classes = sorted(classes)
    if not cliques:
        raise PreconditionViolation("need at least one clique")
    if check:
        for kq in cliques:
            _require_clique(g, kq, classes)
    return {i: min(kq[i] for kq in cliques) for i in classes}


def clique_max(
    cliques: Sequence[Mapping[int, int]],
    classes: Iterable[int],
    g: ColoredGraph,
    check: bool = True,
) -> dict[int, int]:
    """Coordinatewise maximum; dual of clique_min."""
    classes = sorted(classes)
    if not cliques:
        raise PreconditionViolation("need at least one clique")
    if check:
        for kq in cliques:
            _require_clique(g, kq, classes)
    return {i: max(kq[i] for kq in cliques) for i in classes}


class CliqueTable:
    """MinK/MaxK tables: per prefix size i and vertex v of class i-1, the
    coordinatewise extreme clique of size i through v within classes 0..i-1,
    or None when no such clique exists."""

    def __init__(self, min_tables: list, max_tables: list):
        self._min = min_tables
        self._max = max_tables
        self.k = len(min_tables) - 1

    def min_entry(self, i: int, v: int) -> tuple[int, ...] | None:
        return self._min[i][v]

    def max_entry(self, i: int, v: int) -> tuple[int, ...] | None:
        return self._max[i][v]


def _extend(
    g: ColoredGraph,
    ci: int,
    v: int,
    min_tables: list,
    max_tables: list,
    want_min: bool,
    c: OpCounter,
) -> tuple[int, ...] | None:
    """One table entry: grow X = {v} downward through classes ci-1 .. 0.

    At class j the candidate set N_j(X) is the running interval intersection;
    candidates are scanned from the extreme end, and a candidate x is accepted
    when its own extreme table entry of the opposite kind lies inside the
    running up-set (resp. down-set) thresholds of X.
    """
    los = [int(g.intervals(ci, l)[0][v]) for l in range(ci)]
    his = [int(g.intervals(ci, l)[1][v]) for l in range(ci)]
    c.add(ci)
    result = [-1] * (ci + 1)
    result[ci] = v
    for j in range(ci - 1, -1, -1):
        low, high = los[j], his[j]
        found = -1
        if want_min:
            x = low
            while x <= high:
                c.add(1 + j)
                if j == 0:
                    found = x
                    break
                entry = max_tables[j + 1][x]
                if entry is not None and all(entry[l] >= los[l] for l in range(j)):
                    found = x
                    break
                x += 1
        else:
            x = high
            while x >= low:
                c.add(1 + j)
                if j == 0:
                    found = x
                    break
                entry = min_tables[j + 1][x]
                if entry is not None and all(entry[l] <= his[l] for l in range(j)):
                    found = x
                    break
                x -= 1
        if found < 0:
            return None
        result[j] = found
        for l in range(j):
            lo_arr, hi_arr = g.intervals(j, l)
            los[l] = max(los[l], int(lo_arr[found]))
            his[l] = min(his[l], int(hi_arr[found]))
        c.add(j)
    entry = tuple(result)
    assert entry[ci] == v
    return entry


def compute_clique_tables(g: ColoredGraph, counter: OpCounter | None = None) -> CliqueTable:
    """Fill MinK and MaxK for every prefix size 1..k.

    Size 1 is the trivial base row {v}; size i is computed from the opposite
    tables of sizes below i, exactly one entry per vertex.
    """
    c = counter if counter is not None else OpCounter()
    k = g.k
    min_tables: list = [None] * (k + 1)
    max_tables: list = [None] * (k + 1)
    base = [(v,) for v in range(g.class_size(0))] if k >= 1 else []
    min_tables[1] = list(base)
    max_tables[1] = list(base)
    for i in range(2, k + 1):
        ci = i - 1
        min_tables[i] = [
            _extend(g, ci, v, min_tables, max_tables, True, c) for v in range(g.class_size(ci))
        ]
        max_tables[i] = [
            _extend(g, ci, v, min_tables, max_tables, False, c) for v in range(g.class_size(ci))
        ]
    return CliqueTable(min_tables, max_tables)


def solve_multicolored_clique(
    g: ColoredGraph, counter: OpCounter | None = None
) -> tuple[int, ...] | None:
    """A k-clique (one position per class) or None, read off the MinK table.

    The witness is MinK[k][v] for the class-order-least v whose entry is
    nonempty, so results are deterministic.
    """
    if g.k == 0:
        raise PreconditionViolation("coloured graph needs at least one class")
    tables = compute_clique_tables(g, counter)
    for v in range(g.class_size(g.k - 1)):
        entry = tables.min_entry(g.k, v)
        if entry is not None:
            return entry
    return None


def embed_via_clique(q: Poset, p: Poset, counter: OpCounter | None = None) -> tuple[int, ...] | None:
    """Embedding of q into p, or None, via the coloured-clique solver.

    Compatibility functions are tried in lexicographic order (as base-w
    numerals over the chain indices of the host's chain partition); the
    witness comes from the first successful one and is re-verified against
    the embedding definition before returning.
    """
    if q.n == 0:
        raise PreconditionViolation("pattern must be nonempty")
    if p.n == 0:
        raise PreconditionViolation("host must be nonempty")
    c = counter if counter is not None else OpCounter()
    w, cp = width_and_chain_partition(p)
    cache: dict = {}
    for f in product(range(w), repeat=q.n):
        c.branches += 1
        g = build_colored_graph(q, p, f, cp, counter=c, cache=cache)
        sol = solve_multicolored_clique(g, counter=c)
        if sol is not None:
            e = tuple(int(g.elements[i][pos]) for i, pos in enumerate(sol))
            if not is_embedding(q, p, e):
                raise AssertionError("clique solver produced a non-embedding")
            return e
    return None
