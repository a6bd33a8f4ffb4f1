import itertools
import random

import pytest

from choreorient.instance import Edge, ChoreInstance, make_instance
from choreorient.pdcover import (
    PdInstance,
    build_formula,
    expected_clause_count,
    find_cover,
    verify_cover,
)
from choreorient.twosat import neg, pos


def graph(n, pairs):
    return ChoreInstance(n, tuple(Edge(u, v, 0, 0) for u, v in pairs))


def exhaustive_cover_exists(inst):
    n = inst.vertex_count
    for mask in range(1 << n):
        chosen = {x for x in range(n) if mask >> x & 1}
        if all(e.u in chosen or e.v in chosen for e in inst.graph_h.edges) \
                and all(len(chosen & g) <= 1 for g in inst.groups_p) \
                and not chosen & inst.forbidden_d:
            return True
    return False


def random_pd(rnd):
    n = rnd.randint(1, 8)
    pairs = set()
    for _ in range(rnd.randint(0, 10)):
        u, v = rnd.randrange(n), rnd.randrange(n)
        pairs.add((min(u, v), max(u, v)))
    verts = list(range(n))
    rnd.shuffle(verts)
    groups, forbidden = [], set()
    k = 0
    while k < n:
        size = rnd.randint(1, 4)
        block = verts[k:k + size]
        k += size
        r = rnd.random()
        if r < 0.4:
            groups.append(frozenset(block))
        elif r < 0.6:
            forbidden |= set(block)
    return PdInstance(graph(n, sorted(pairs)), tuple(groups), frozenset(forbidden))


def test_single_edge_formula():
    f = build_formula(PdInstance(graph(2, [(0, 1)])))
    assert f.variable_count == 2
    assert f.clauses == [(pos(0), pos(1))]


def test_self_loop_forces_vertex():
    f = build_formula(PdInstance(graph(1, [(0, 0)])))
    assert f.clauses == [(pos(0), pos(0))]
    assert find_cover(PdInstance(graph(1, [(0, 0)]))) == {0}


def test_group_pair_clauses():
    pd = PdInstance(graph(3, []), (frozenset({0, 1, 2}),))
    f = build_formula(pd)
    assert len(f) == 3
    assert all(a.negated and b.negated for a, b in f.clauses)


def test_single_edge_cover():
    pd = PdInstance(graph(2, [(0, 1)]))
    cover = find_cover(pd)
    assert cover is not None and verify_cover(pd, cover)


def test_forbidden_endpoints():
    assert find_cover(PdInstance(graph(2, [(0, 1)]), forbidden_d={0, 1})) is None


def test_triangle_in_one_group():
    pd = PdInstance(graph(3, [(0, 1), (1, 2), (0, 2)]), (frozenset({0, 1, 2}),))
    assert not exhaustive_cover_exists(pd)
    assert find_cover(pd) is None


def test_verify_cover_examples():
    tri = PdInstance(graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert verify_cover(tri, {0, 1})
    assert not verify_cover(tri, {0})
    path = PdInstance(graph(3, [(0, 1), (1, 2)]), (frozenset({0, 1}),))
    assert verify_cover(path, {1})
    assert not verify_cover(path, {0, 1})
    assert not verify_cover(PdInstance(graph(2, [(0, 1)]), forbidden_d={1}), {1})


def test_groups_must_be_disjoint():
    with pytest.raises(ValueError):
        PdInstance(graph(3, []), (frozenset({0, 1}), frozenset({1, 2})))
    with pytest.raises(ValueError):
        PdInstance(graph(3, []), forbidden_d={5})


def test_parallel_edges_tolerated():
    h = ChoreInstance(2, (Edge(0, 1, 0, 0), Edge(0, 1, 0, 0)), allow_multi=True)
    pd = PdInstance(h, forbidden_d={0})
    assert find_cover(pd) == {1}


@pytest.mark.parametrize("seed", range(10))
def test_matches_exhaustive_enumeration(seed):
    rnd = random.Random(seed)
    for _ in range(250):
        pd = random_pd(rnd)
        cover = find_cover(pd)
        assert (cover is not None) == exhaustive_cover_exists(pd)
        if cover is not None:
            assert verify_cover(pd, cover)
        assert len(build_formula(pd)) == expected_clause_count(pd)
