"""Finite posets: construction, validation, queries, width and chain partitions.

Elements are dense 0-based indices.  The order relation is stored as a dense
n-by-n boolean matrix `leq` with leq[a, b] == True iff a <= b.  Posets are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import AntisymmetryViolation, FormatError, IndexOutOfRange, PreconditionViolation


class Relation(Enum):
    LessThan = "<"
    GreaterThan = ">"
    Equal = "="
    Incomparable = "||"


class Poset:
    """A finite poset on {0, .., n-1} backed by a read-only boolean matrix."""

    __slots__ = ("n", "leq")

    def __init__(self, leq: np.ndarray, validate: bool = True):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"leq must be square, got shape {leq.shape}")
        self.n = int(leq.shape[0])
        self.leq = leq
        self.leq.flags.writeable = False
        if validate:
            self.validate()

    def validate(self) -> None:
        """Check reflexivity, antisymmetry and transitivity; raise if violated."""
        n, leq = self.n, self.leq
        if n == 0:
            return
        if not leq.diagonal().all():
            raise ValueError("relation is not reflexive")
        sym = leq & leq.T
        np.fill_diagonal(sym, False)
        if sym.any():
            a, b = map(int, np.argwhere(sym)[0])
            raise AntisymmetryViolation([a, b, a])
        if (_bool_matmul(leq, leq) & ~leq).any():
            raise ValueError("relation is not transitive")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and bool(np.array_equal(self.leq, other.leq))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={cover_pairs(self)})"


@dataclass(frozen=True)
class ChainPartition:
    """A partition of a poset into width-many chains plus an antichain certificate.

    Chains are sorted by their minimum element index; each chain lists its
    elements in ascending order.  `antichain` has exactly one element per
    chain and is pairwise incomparable.
    """

    chains: tuple[tuple[int, ...], ...]
    chain_of: tuple[int, ...]
    antichain: tuple[int, ...]


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 matmul + threshold beats integer matmul for the sizes we see
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


def _check_index(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"element {i} outside [0, {n})")


def close_and_validate(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of the given pairs, validated as a poset.

    Raises IndexOutOfRange for indices outside [0, n) and
    AntisymmetryViolation (naming a witness cycle) when the closure relates
    two distinct elements both ways.
    """
    pairs = list(pairs)
    for u, v in pairs:
        _check_index(u, n)
        _check_index(v, n)
    leq = np.eye(n, dtype=bool)
    for u, v in pairs:
        leq[u, v] = True
    # closure by repeated squaring
    while True:
        nxt = leq | _bool_matmul(leq, leq)
        if np.array_equal(nxt, leq):
            break
        leq = nxt
    bad = leq & leq.T
    np.fill_diagonal(bad, False)
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise AntisymmetryViolation(_witness_cycle(n, pairs, a, b))
    return Poset(leq, validate=False)


def _witness_cycle(n: int, pairs: list[tuple[int, int]], a: int, b: int) -> list[int]:
    """Reconstruct an explicit a <= .. <= b <= .. <= a cycle over input arcs."""
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        succ[u].append(v)

    def path(src: int, dst: int) -> list[int]:
        prev = {src: -1}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == dst:
                out = [x]
                while prev[x] != -1:
                    x = prev[x]
                    out.append(x)
                return out[::-1]
            for y in succ[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        raise AssertionError("cycle endpoints must be connected")

    forward = path(a, b)
    back = path(b, a)
    return forward + back[1:]


def relate(p: Poset, a: int, b: int) -> Relation:
    """Classify the ordered pair (a, b) as Equal/LessThan/GreaterThan/Incomparable."""
    _check_index(a, p.n)
    _check_index(b, p.n)
    if a == b:
        return Relation.Equal
    ab = bool(p.leq[a, b])
    ba = bool(p.leq[b, a])
    if ab:
        return Relation.LessThan
    if ba:
        return Relation.GreaterThan
    return Relation.Incomparable


def cover_pairs(p: Poset) -> list[tuple[int, int]]:
    """The Hasse diagram: pairs (a, b) with a < b and nothing strictly between."""
    if p.n == 0:
        return []
    strict = p.leq & ~np.eye(p.n, dtype=bool)
    inbetween = _bool_matmul(strict, strict)
    covers = strict & ~inbetween
    return [(int(a), int(b)) for a, b in np.argwhere(covers)]


def disjoint_union(a: Poset, b: Poset) -> Poset:
    """Side-by-side union; b's elements are shifted by a.n, no cross pairs."""
    n = a.n + b.n
    leq = np.zeros((n, n), dtype=bool)
    leq[: a.n, : a.n] = a.leq
    leq[a.n :, a.n :] = b.leq
    return Poset(leq, validate=False)


def is_embedding(q: Poset, p: Poset, e: Sequence[int]) -> bool:
    """True iff e is injective and order-preserving-and-reflecting from q into p."""
    if len(e) != q.n or len(set(e)) != q.n:
        return False
    if any(not 0 <= x < p.n for x in e):
        return False
    for i in range(q.n):
        for j in range(q.n):
            if bool(q.leq[i, j]) != bool(p.leq[e[i], e[j]]):
                return False
    return True


# -- width and chain partition (Dilworth via bipartite matching) --------------
#
# Split graph: left copy of each element a, right copy of each b, with an edge
# iff a < b strictly.  A maximum matching M gives a partition into n - |M|
# chains (follow matched successor links), and n - |M| equals the width.  The
# antichain certificate comes from the complement of a minimum vertex cover.


def _strict_bitrows(p: Poset) -> list[int]:
    strict = p.leq & ~np.eye(p.n, dtype=bool)
    packed = np.packbits(strict, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _max_matching(rows: list[int], n: int) -> tuple[list[int], list[int]]:
    match_l = [-1] * n  # a -> matched b with a < b
    match_r = [-1] * n
    free_r = (1 << n) - 1
    # greedy pass: lowest free strict-upper neighbour
    for a in range(n):
        m = rows[a] & free_r
        if m:
            b = (m & -m).bit_length() - 1
            match_l[a] = b
            match_r[b] = a
            free_r ^= 1 << b
    # augmenting-path passes for the leftovers
    for a0 in range(n):
        if match_l[a0] != -1:
            continue
        visited = 0
        parent: dict[int, int] = {}
        stack: list[list[int]] = [[a0, rows[a0]]]
        end = -1
        while stack and end == -1:
            frame = stack[-1]
            rem = frame[1] & ~visited
            if not rem:
                stack.pop()
                continue
            b = (rem & -rem).bit_length() - 1
            frame[1] = rem & ~(1 << b)
            visited |= 1 << b
            parent[b] = frame[0]
            if match_r[b] == -1:
                end = b
            else:
                stack.append([match_r[b], rows[match_r[b]]])
        if end != -1:
            b = end
            while b != -1:
                a = parent[b]
                prev = match_l[a]
                match_l[a] = b
                match_r[b] = a
                b = prev
    return match_l, match_r


def _koenig_antichain(rows: list[int], match_l: list[int], match_r: list[int], n: int) -> list[int]:
    # Z = vertices reachable from unmatched left copies by alternating paths;
    # cover = (L \ Z_L) + (R & Z_R); certificate = elements with both copies uncovered.
    zl = 0
    zr = 0
    frontier = [a for a in range(n) if match_l[a] == -1]
    for a in frontier:
        zl |= 1 << a
    while frontier:
        new_r = 0
        for a in frontier:
            row = rows[a]
            if match_l[a] != -1:
                row &= ~(1 << match_l[a])
            new_r |= row
        new_r &= ~zr
        zr |= new_r
        frontier = []
        m = new_r
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            a2 = match_r[b]
            if a2 != -1 and not (zl >> a2) & 1:
                zl |= 1 << a2
                frontier.append(a2)
    return [a for a in range(n) if (zl >> a) & 1 and not (zr >> a) & 1]


def width_and_chain_partition(p: Poset) -> tuple[int, ChainPartition]:
    """Width w of the poset together with a partition into exactly w chains.

    The returned partition also carries a size-w antichain certificate, which
    is re-verified (pairwise incomparability) before returning.
    """
    if p.n == 0:
        raise PreconditionViolation("width of the empty poset is not supported")
    n = p.n
    rows = _strict_bitrows(p)
    match_l, match_r = _max_matching(rows, n)
    matched = sum(1 for b in match_l if b != -1)
    w = n - matched

    heads = [a for a in range(n) if match_r[a] == -1]
    chains = []
    for h in heads:
        chain = [h]
        while match_l[chain[-1]] != -1:
            chain.append(match_l[chain[-1]])
        chains.append(tuple(chain))
    assert len(chains) == w
    chains.sort(key=min)

    chain_of = [-1] * n
    for ci, chain in enumerate(chains):
        for e in chain:
            chain_of[e] = ci
    assert all(c != -1 for c in chain_of)

    anti = _koenig_antichain(rows, match_l, match_r, n)
    assert len(anti) == w
    for i, a in enumerate(anti):
        for b in anti[i + 1 :]:
            assert relate(p, a, b) is Relation.Incomparable
    cp = ChainPartition(tuple(chains), tuple(chain_of), tuple(sorted(anti)))
    return w, cp


# -- poset text format ---------------------------------------------------------
#
#   poset <name>
#   elements <n>
#   cover <u> <v>        # 0-based, u < v; the closure is taken on load
#
# `leq <u> <v>` is accepted as a synonym for `cover`; `#` starts a comment.


def parse_poset_text(text: str) -> Poset:
    name_seen = False
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "poset":
            if name_seen:
                raise FormatError(f"line {lineno}: duplicate 'poset' header")
            name_seen = True
        elif kind == "elements":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate 'elements' line")
            if len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'elements <n>'")
            n = int(fields[1])
        elif kind in ("cover", "leq"):
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected '{kind} <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer element id") from exc
            pairs.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
    if n is None:
        raise FormatError("missing 'elements <n>' line")
    try:
        return close_and_validate(n, pairs)
    except IndexOutOfRange as exc:
        raise FormatError(str(exc)) from exc


def format_poset_text(p: Poset, name: str = "p") -> str:
    lines = [f"poset {name}", f"elements {p.n}"]
    lines += [f"cover {u} {v}" for u, v in cover_pairs(p)]
    return "\n".join(lines) + "\n"


def load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poset_text(fh.read())
