"""Shared corpus builders for the test suite (seeded, deterministic)."""

from __future__ import annotations

import random

import numpy as np
import pytest

import posetmc as pm


def make_random_pair(rng: random.Random, max_q: int = 4, max_p: int = 12, max_width: int = 4):
    """A random (pattern, host) pair with bounded host width."""
    while True:
        nq = rng.randint(1, max_q)
        np_ = rng.randint(1, max_p)
        q = pm.random_poset(nq, rng.uniform(0.0, 1.0), rng.randrange(2**30))
        p = pm.random_poset(np_, rng.uniform(0.0, 1.0), rng.randrange(2**30))
        if pm.brute_force_width(p) <= max_width:
            return q, p


def make_sentence_text(rng: random.Random, q: int, max_atoms: int = 4) -> str:
    """Random prenex existential sentence text with q variables."""
    names = ["x", "y", "z", "u", "v"][:q]

    def atom() -> str:
        a, b = rng.choice(names), rng.choice(names)
        op = rng.choice(["<=", "="])
        s = f"{a} {op} {b}"
        return f"!({s})" if rng.random() < 0.4 else s

    expr = atom()
    for _ in range(rng.randint(0, max_atoms - 1)):
        op = rng.choice([" & ", " | "])
        nxt = atom()
        roll = rng.random()
        if roll < 0.2:
            expr = f"!({expr}{op}{nxt})"
        elif roll < 0.5:
            expr = f"({expr}{op}{nxt})"
        else:
            expr = f"{expr}{op}{nxt}"
    prefix = "".join(f"E {n}. " for n in names)
    return prefix + expr


def chain(n: int) -> pm.Poset:
    return pm.close_and_validate(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> pm.Poset:
    return pm.close_and_validate(n, [])


def diamond() -> pm.Poset:
    return pm.close_and_validate(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
