import numpy as np
import pytest

import posetmc as pm
from conftest import antichain, chain


def test_embed_trivial_cases():
    one = chain(1)
    assert pm.brute_force_embed(one, one) == (0,)
    assert pm.brute_force_embed(chain(2), antichain(2)) is None
    i2 = pm.independent_poset(2)
    assert pm.brute_force_embed(i2, i2) == (0, 1, 2, 3, 4, 5)


def test_embed_returns_lexicographic_first():
    # both (0,) and (1,) embed a single point; enumeration order picks 0
    assert pm.brute_force_embed(chain(1), antichain(3)) == (0,)
    # 2-chain into diamond: first image lexicographically is (0, 1)
    diamond = pm.close_and_validate(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert pm.brute_force_embed(chain(2), diamond) == (0, 1)


def test_embed_caps():
    big = antichain(17)
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_embed(chain(1), big)
    assert pm.brute_force_embed(chain(1), big, host_cap=17) == (0,)
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_embed(antichain(7), antichain(7))


def test_model_check_trivial_cases():
    s = pm.parse_sentence("E x. x <= x")
    assert pm.brute_force_model_check(s, chain(3))
    incomp = pm.parse_sentence("E x. E y. !(x <= y) & !(y <= x)")
    assert not pm.brute_force_model_check(incomp, chain(4))
    assert pm.brute_force_model_check(incomp, antichain(2))


def test_model_check_cap():
    s = pm.parse_sentence("E x. E y. E z. x <= y")
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_model_check(s, chain(5), cap=100)


def test_width_trivial_cases():
    assert pm.brute_force_width(chain(7)) == 1
    assert pm.brute_force_width(antichain(6)) == 6
    assert pm.brute_force_width(pm.independent_poset(3)) == 3
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_width(antichain(17))


def test_clique_trivial_cases():
    full = pm.ColoredGraph(
        [np.array([0]), np.array([1]), np.array([2])],
        {
            (0, 1): np.ones((1, 1), dtype=bool),
            (0, 2): np.ones((1, 1), dtype=bool),
            (1, 2): np.ones((1, 1), dtype=bool),
        },
    )
    assert pm.brute_force_clique(full) == (0, 0, 0)
    empty_class = pm.ColoredGraph(
        [np.array([0]), np.array([], dtype=int)],
        {(0, 1): np.zeros((1, 0), dtype=bool)},
    )
    assert pm.brute_force_clique(empty_class) is None


def test_clique_cap():
    sizes = [40, 40, 40, 40]
    adjacency = {
        (i, j): np.ones((40, 40), dtype=bool) for i in range(4) for j in range(i + 1, 4)
    }
    g = pm.ColoredGraph([np.arange(40)] * 4, adjacency)
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_clique(g)


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("POSETMC_ORACLE_CAP", "30")
    assert pm.brute_force_width(antichain(17)) == 17  # 17 <= 30 now allowed
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_embed(chain(1), antichain(31))
    # explicit arguments still win over the environment
    with pytest.raises(pm.CapExceeded):
        pm.brute_force_width(antichain(17), cap=16)
