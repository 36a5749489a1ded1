"""Instance families for tests and benchmarks.

Includes the hardness constructions (chain triples per graph vertex, padding
and stacking for OR-composition), seeded random posets, and the banded
layered-chain family the benchmark harness uses for width-controlled hosts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import FormatError, IndexOutOfRange, PreconditionViolation
from .poset import Poset, disjoint_union


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside [0, {self.n})")
            if u > v:
                raise ValueError("edges must be normalized with u < v")

    @staticmethod
    def from_edges(n: int, edges) -> "SimpleGraph":
        return SimpleGraph(n, frozenset((min(u, v), max(u, v)) for u, v in edges))


def independent_poset(k: int) -> Poset:
    """I_k: k mutually incomparable chains of three elements (3i, 3i+1, 3i+2)."""
    if k < 1:
        raise PreconditionViolation("k must be at least 1")
    n = 3 * k
    leq = np.eye(n, dtype=bool)
    for i in range(k):
        a = 3 * i
        leq[a, a + 1] = leq[a, a + 2] = leq[a + 1, a + 2] = True
    return Poset(leq, validate=False)


def poset_of_graph(g: SimpleGraph) -> Poset:
    """Three-element chain a_v < b_v < c_v per vertex, plus a_v < c_u per edge.

    The stated relation is already transitively closed: every a_v is minimal
    and every c_v maximal, so the cross pairs compose with nothing.
    """
    n = 3 * g.n
    leq = np.eye(n, dtype=bool)
    for v in range(g.n):
        a = 3 * v
        leq[a, a + 1] = leq[a, a + 2] = leq[a + 1, a + 2] = True
    for u, v in g.edges:
        leq[3 * u, 3 * v + 2] = True
        leq[3 * v, 3 * u + 2] = True
    return Poset(leq, validate=False)


def stack_posets(parts: Sequence[Poset]) -> Poset:
    """Disjoint union plus every pair (p, p') with p in an earlier part.

    The result's width is the maximum width over the parts: any antichain
    meets only one part, since cross-part pairs are comparable.
    """
    if len(parts) < 1:
        raise PreconditionViolation("need at least one poset")
    n = sum(p.n for p in parts)
    leq = np.zeros((n, n), dtype=bool)
    offset = 0
    offsets = []
    for p in parts:
        offsets.append(offset)
        leq[offset : offset + p.n, offset : offset + p.n] = p.leq
        offset += p.n
    for i in range(len(parts)):
        lo_i = offsets[i]
        hi_i = lo_i + parts[i].n
        leq[lo_i:hi_i, hi_i:] = True
    return Poset(leq, validate=False)


def _has_three_chain(p: Poset) -> bool:
    strict = p.leq & ~np.eye(p.n, dtype=bool)
    two_step = (strict.astype(np.float32) @ strict.astype(np.float32)) > 0.5
    return bool(two_step.any())


def or_compose(instances: Sequence[tuple[Poset, int]]) -> tuple[Poset, int]:
    """OR-composition for the independent-embedding problem.

    Each (P_i, k_i) is padded with I_{kmax - k_i} to equalize the parameter,
    then the padded posets are stacked.  I_{kmax} embeds into the result iff
    it embeds into some padded part, i.e. iff some input was a Yes-instance.

    The stacking argument needs kmax > 1 (stacked singleton chains would
    fabricate a 3-chain), so kmax == 1 is solved directly: each instance asks
    for a 3-element chain, and a constant-size instance with the disjunction
    verdict is returned.
    """
    if len(instances) < 1:
        raise PreconditionViolation("need at least one instance")
    if any(k < 1 for _, k in instances):
        raise PreconditionViolation("all parameters must be at least 1")
    k_max = max(k for _, k in instances)
    if k_max == 1:
        if any(_has_three_chain(p) for p, _ in instances):
            return independent_poset(1), 1
        one = np.ones((1, 1), dtype=bool)
        return Poset(one, validate=False), 1
    padded = []
    for p, k in instances:
        padded.append(p if k == k_max else disjoint_union(p, independent_poset(k_max - k)))
    return stack_posets(padded), k_max


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Transitive closure of index-respecting random arcs; always a valid poset.

    Each pair (i, j) with i < j becomes an arc with the given probability;
    arcs point from lower to higher index, so the sampled digraph is acyclic
    and the closure never violates antisymmetry.
    """
    if not 0.0 <= density <= 1.0:
        raise PreconditionViolation(f"density {density} outside [0, 1]")
    rng = random.Random(seed)
    succ: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                succ[i].append(j)
    leq = np.eye(n, dtype=bool)
    for i in range(n - 1, -1, -1):
        for j in succ[i]:
            leq[i] |= leq[j]
    return Poset(leq, validate=False)


def banded_poset(n: int, w: int, band: int = 1, offsets: Sequence[int] | None = None) -> Poset:
    """w chains with cross-chain order a < b iff height(b) - height(a) >= band.

    Heights run 1.. along each chain, shifted per chain by `offsets`.  The
    band (>= 1) guarantees transitivity and antisymmetry by construction, and
    with small offsets every chain contains a common height, so the width is
    exactly w.  Benchmark hosts come from this family.
    """
    if w < 1 or n < w:
        raise PreconditionViolation(f"need 1 <= w <= n, got w={w}, n={n}")
    if band < 1:
        raise PreconditionViolation("band must be at least 1")
    if offsets is None:
        offsets = [0] * w
    if len(offsets) != w:
        raise PreconditionViolation("need one offset per chain")
    chain_id = np.empty(n, dtype=np.int64)
    height = np.empty(n, dtype=np.int64)
    base = n // w
    extra = n % w
    idx = 0
    for r in range(w):
        length = base + (1 if r < extra else 0)
        chain_id[idx : idx + length] = r
        height[idx : idx + length] = np.arange(1, length + 1) + offsets[r]
        idx += length
    same = chain_id[:, None] == chain_id[None, :]
    diff = height[None, :] - height[:, None]
    leq = (same & (diff >= 0)) | (~same & (diff >= band))
    return Poset(leq, validate=False)


# -- graph text format -----------------------------------------------------------
#
#   graph <name>
#   vertices <n>
#   edge <u> <v>
#
# mirroring the poset format; `#` starts a comment.


def parse_graph_text(text: str) -> SimpleGraph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "graph":
            continue
        if kind == "vertices":
            if len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'vertices <n>'")
            n = int(fields[1])
        elif kind == "edge":
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'edge <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer vertex id") from exc
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
    if n is None:
        raise FormatError("missing 'vertices <n>' line")
    try:
        return SimpleGraph.from_edges(n, edges)
    except (IndexOutOfRange, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def format_graph_text(g: SimpleGraph, name: str = "g") -> str:
    lines = [f"graph {name}", f"vertices {g.n}"]
    lines += [f"edge {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> SimpleGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
