"""From sentences to embedding instances.

A sentence with variables x_1..x_q holds on a host poset exactly when, for
some partition of the variables (identifying variables forced equal) and some
poset on the blocks satisfying the matrix, that block poset embeds into the
host.  Enumerating every (partition, block poset) pair whose induced
interpretation satisfies the matrix and testing each pattern for embedding is
therefore a complete decision procedure.  The enumeration is intrinsically
exponential in q, hence the variable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .clique import embed_via_clique
from .csp import embed_via_csp
from .errors import PreconditionViolation, TooManyVariables
from .instrument import OpCounter
from .logic import Sentence, eval_matrix
from .poset import Poset

DEFAULT_VARIABLE_CAP = 8


@dataclass(frozen=True)
class QuotientTemplate:
    """A partition of the sentence's variables plus a poset on the blocks.

    The induced interpretation (x <= y iff the blocks are related in the
    pattern, x = y iff the blocks coincide) satisfies the sentence's matrix.
    """

    blocks: tuple[tuple[str, ...], ...]
    pattern: Poset
    block_of: dict[str, int]


def _restricted_growth_strings(q: int) -> Iterator[list[int]]:
    """All set partitions of q items as restricted growth strings, in lex order."""
    a = [0] * q

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == q:
            yield list(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def _labeled_posets(b: int) -> Iterator[np.ndarray]:
    """Every partial order on b labelled points, by sign assignment per pair.

    Each unordered pair independently gets incomparable / less / greater;
    assignments whose relation is not already transitively closed are
    discarded, so what remains is exactly the set of labelled posets.
    """
    pairs = [(i, j) for i in range(b) for j in range(i + 1, b)]
    for signs in product((0, 1, 2), repeat=len(pairs)):
        rel = np.eye(b, dtype=bool)
        for (i, j), s in zip(pairs, signs):
            if s == 1:
                rel[i, j] = True
            elif s == 2:
                rel[j, i] = True
        closed = True
        for m in range(b):
            # transitivity: rel[i, m] and rel[m, j] must imply rel[i, j]
            implied = rel[:, m][:, None] & rel[m, :][None, :]
            if (implied & ~rel).any():
                closed = False
                break
        if closed:
            yield rel


def enumerate_templates(s: Sentence, cap: int = DEFAULT_VARIABLE_CAP) -> list[QuotientTemplate]:
    """Every satisfying (partition, block poset) pair, in a fixed order.

    Partitions are iterated as restricted growth strings (lexicographic),
    block posets by pair-sign assignment (incomparable, less, greater); no
    satisfying pair is missing and none repeats.
    """
    q = len(s.vars)
    if q < 1:
        raise PreconditionViolation("sentence must have at least one variable")
    if q > cap:
        raise TooManyVariables(f"{q} variables over cap {cap}")
    names = [v.name for v in s.vars]
    out: list[QuotientTemplate] = []
    seen: set[tuple] = set()
    for rgs in _restricted_growth_strings(q):
        b = max(rgs) + 1
        block_of = {name: rgs[i] for i, name in enumerate(names)}
        blocks = tuple(
            tuple(name for name in names if block_of[name] == blk) for blk in range(b)
        )
        for rel in _labeled_posets(b):
            pattern = Poset(rel, validate=True)
            if eval_matrix(s.matrix, pattern, block_of):
                key = (tuple(rgs), rel.tobytes())
                assert key not in seen, "duplicate template"
                seen.add(key)
                out.append(QuotientTemplate(blocks, pattern, dict(block_of)))
    return out


def _embed_brute(q: Poset, p: Poset, counter: OpCounter | None) -> tuple[int, ...] | None:
    return oracle.brute_force_embed(q, p, counter=counter)


_SOLVERS: dict[str, Callable] = {
    "clique": embed_via_clique,
    "csp": embed_via_csp,
    "brute": _embed_brute,
}


def model_check(
    s: Sentence,
    p: Poset,
    solver: str = "clique",
    cap: int = DEFAULT_VARIABLE_CAP,
    counter: OpCounter | None = None,
) -> tuple[bool, dict[str, int] | None]:
    """Decide whether the sentence holds on the host; witness on success.

    Templates are tried in enumeration order and the witness comes from the
    first whose pattern embeds, so results are deterministic.  All variables
    of one block map to the same host element.
    """
    if p.n == 0:
        raise PreconditionViolation("host poset must be nonempty")
    if solver not in _SOLVERS:
        raise ValueError(f"unknown solver {solver!r}")
    embed = _SOLVERS[solver]
    for template in enumerate_templates(s, cap=cap):
        e = embed(template.pattern, p, counter)
        if e is not None:
            witness = {name: int(e[blk]) for name, blk in template.block_of.items()}
            return True, witness
    return False, None
