import random

import pytest

from kgraphs import families
from kgraphs.monoid import (Bounds, DEFAULT_BOUNDS, TElement, act, acts_freely,
                            atoms, factor_into_atoms, find_periodic_element,
                            forget, graded_keys, is_atom, is_atomic,
                            m_congruent, push_to_level, t_equal, t_leq)
from kgraphs.tri import replay


def gen(v, n, c=1):
    return TElement.gen(v, n, c)


# ---------------------------------------------------------------------------
# level pushes and equality engines


def test_push_single_vertex(one_vertex_3x2):
    g = one_vertex_3x2
    v = gen("v", (0, 0))
    assert push_to_level(g, v, (1, 0)).coeffs == (("v", 3),)
    assert push_to_level(g, v, (1, 1)).coeffs == (("v", 6),)


def test_t_equal_exact_mode(one_vertex_3x2):
    g = one_vertex_3x2
    assert t_equal(g, gen("v", (0, 0)), gen("v", (0, 0), 1)).is_yes
    tri = t_equal(g, gen("v", (0, 0)), gen("v", (1, 0)), mode="exact")
    assert tri.is_no and tri.certificate.kind == "exact_level"
    assert t_equal(g, gen("v", (1, 0), 3), gen("v", (0, 0))).is_yes


def test_t_equal_level_vs_rewrite_oracle():
    small = Bounds(rewrite=8, node_cap=2000)
    checked = 0
    for seed in range(30):
        g = families.random_2graph(seed)
        rng = random.Random(seed * 31 + 1)
        for _ in range(4):
            a = gen(rng.choice(g.vertices), (rng.randint(0, 2), rng.randint(0, 2)))
            b = gen(rng.choice(g.vertices), (rng.randint(0, 2), rng.randint(0, 2)))
            fast = t_equal(g, a, b)
            oracle = t_equal(g, a, b, mode="rewrite", bounds=small)
            assert not fast.is_unknown  # finite, no sources: always decided
            if not oracle.is_unknown:
                assert fast.value == oracle.value, (seed, a, b)
                checked += 1
    assert checked >= 30


def test_t_equal_certificates_replay(loop_pair_tail, cycle4):
    for g, a, b in [(loop_pair_tail, gen("v", (0, 0)), gen("u", (1, 0))),
                    (cycle4, gen("u", (0, 0)), gen("u", (4, 0))),
                    (cycle4, gen("u", (0, 0)), gen("u", (1, 0)))]:
        tri = t_equal(g, a, b)
        assert not tri.is_unknown
        assert replay(g, tri)


def test_t_equal_graded_keys(grid2):
    a = gen((0, 0), (1, 1))
    b = gen((1, 1), (2, 2))
    assert graded_keys(grid2, a) == graded_keys(grid2, b)
    assert t_equal(grid2, a, b).is_yes
    assert t_equal(grid2, a, gen((1, 0), (1, 1))).is_no


def test_t_equal_rewrite_sourceful(arrow):
    v = gen("v", (0, 0))
    tri = t_equal(arrow, act((1, -1), v), v)
    assert tri.is_yes and tri.certificate.kind == "skew_rewrite"
    assert replay(arrow, tri)


# ---------------------------------------------------------------------------
# order


def test_t_leq(one_vertex_3x2, loop_pair_tail):
    g = one_vertex_3x2
    assert t_leq(g, gen("v", (0, 0)), gen("v", (0, 0), 2)).is_yes
    assert t_leq(g, gen("v", (1, 0)), gen("v", (0, 0))).is_yes  # 3 copies exist
    assert not t_leq(g, gen("v", (0, 0), 4), gen("v", (1, 0))).is_yes
    assert t_leq(loop_pair_tail, gen("v", (0, 0)), gen("u", (1, 0))).is_yes


def test_t_leq_antisymmetry_on_samples():
    for seed in range(12):
        g = families.random_2graph(seed)
        rng = random.Random(seed)
        for _ in range(4):
            a = gen(rng.choice(g.vertices), (rng.randint(0, 1), rng.randint(0, 1)))
            b = gen(rng.choice(g.vertices), (rng.randint(0, 1), rng.randint(0, 1)))
            if t_leq(g, a, b).is_yes and t_leq(g, b, a).is_yes:
                assert t_equal(g, a, b).is_yes


# ---------------------------------------------------------------------------
# action and forgetting


def test_act_and_forget(loop_pair_tail):
    a = gen("u", (1, 0)) + gen("v", (0, 2), 2)
    assert act((1, 1), act((-1, -1), a)) == a
    assert forget(a).counter() == {"u": 1, "v": 2}


def test_forget_compatible_with_congruence(loop_pair_tail):
    g = loop_pair_tail
    a, b = gen("v", (0, 0)), gen("u", (1, 0))
    assert t_equal(g, a, b).is_yes
    assert m_congruent(g, forget(a), forget(b)).is_yes


# ---------------------------------------------------------------------------
# atoms


def test_atoms_cycle(cycle4):
    assert set(atoms(cycle4)) == set(cycle4.vertices)
    assert is_atom(cycle4, gen("u", (0, 0))).is_yes
    assert is_atomic(cycle4).is_yes


def test_atoms_one_vertex(one_vertex_3x2):
    g = one_vertex_3x2
    assert atoms(g) == []
    tri = is_atomic(g)
    assert tri.is_no
    assert replay(g, tri)


def test_atoms_loop_pair_tail(loop_pair_tail):
    g = loop_pair_tail
    assert set(atoms(g)) == {"u", "v"}
    assert is_atomic(g).is_yes


def test_factor_into_atoms(cycle4):
    a = gen("u", (0, 0), 2) + gen("z", (0, 0))
    parts = factor_into_atoms(cycle4, a)
    assert parts is not None
    assert sum(c for _, c in parts.items) == 3
    for (v, n), _ in parts.items:
        assert is_atom(cycle4, gen(v, n)).is_yes
    assert t_equal(cycle4, parts, a).is_yes


def test_grid_all_leaves(grid2):
    tri = is_atomic(grid2, DEFAULT_BOUNDS)
    assert tri.is_yes  # bounded verdict: every sampled vertex is a leaf
    assert replay(grid2, tri)


def test_bratteli_no_atoms(bratteli):
    tri = is_atomic(bratteli, DEFAULT_BOUNDS)
    assert tri.is_no
    assert replay(bratteli, tri)


# ---------------------------------------------------------------------------
# periodicity and freeness


def test_grid_free(grid2):
    tri = acts_freely(grid2, DEFAULT_BOUNDS)
    assert tri.is_yes and tri.certificate.kind == "graded_translation"
    assert find_periodic_element(grid2, DEFAULT_BOUNDS) is None


def test_single_vertex_freeness(one_vertex_3x2, one_vertex_3x3):
    tri = acts_freely(one_vertex_3x2, DEFAULT_BOUNDS)
    assert tri.is_yes and tri.certificate.kind == "free_multiplicative"
    tri = acts_freely(one_vertex_3x3, DEFAULT_BOUNDS)
    assert tri.is_no
    a, p = tri.certificate.data["element"], tri.certificate.data["period"]
    assert t_equal(one_vertex_3x3, act(p, a), a).is_yes
    assert replay(one_vertex_3x3, tri)


def test_leaf_collision_freeness(loop_pair_tail, cycle4):
    tri = acts_freely(loop_pair_tail, DEFAULT_BOUNDS)
    assert tri.is_no
    assert tri.certificate.data["element"] == gen("u", (0, 0))
    assert tri.certificate.data["period"] == (1, 0)
    tri = acts_freely(cycle4, DEFAULT_BOUNDS)
    assert tri.is_no
    assert tri.certificate.data["period"] == (1, -1)


def test_bratteli_periodic_witness(bratteli):
    found = find_periodic_element(bratteli, DEFAULT_BOUNDS)
    assert found is not None
    a, p = found
    assert p == (0, 1)
    assert t_equal(bratteli, act(p, a), a).is_yes
