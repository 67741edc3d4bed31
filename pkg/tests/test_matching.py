"""General and bipartite maximum matching against brute force."""

from itertools import combinations, permutations
from random import Random

import pytest

from heavyfactors import bipartite_maximum_matching, maximum_matching, perfect_matching


def brute_force_matching_size(n, edges):
    """Largest matching by recursion on the lowest unmatched vertex, n small."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def best(free):
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        top = best(rest)  # leave v exposed
        for u in adj[v]:
            if u in rest:
                top = max(top, 1 + best(rest - {u}))
        return top

    return best(frozenset(range(n)))


def matching_size(match):
    return sum(1 for v, p in enumerate(match) if p != -1 and v < p)


def check_valid(match, edges, n):
    eset = set((min(u, v), max(u, v)) for u, v in edges)
    for v, p in enumerate(match):
        if p == -1:
            continue
        assert match[p] == v, "matching must be symmetric"
        assert (min(v, p), max(v, p)) in eset, "matched pair must be an edge"


def test_triangle_matches_one_pair():
    match = maximum_matching(3, [(0, 1), (1, 2), (0, 2)])
    assert matching_size(match) == 1


def test_five_cycle_needs_blossom_handling():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    match = maximum_matching(5, edges)
    check_valid(match, edges, 5)
    assert matching_size(match) == 2


def test_two_triangles_joined_by_a_bridge():
    """Classic blossom case: augmenting path must pass through odd cycles."""
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    match = maximum_matching(6, edges)
    check_valid(match, edges, 6)
    assert matching_size(match) == 3
    assert perfect_matching(6, edges) is not None


def test_petersen_graph_has_a_perfect_matching():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    pm = perfect_matching(10, outer + inner + spokes)
    assert pm is not None and len(pm) == 5
    assert sorted(v for e in pm for v in e) == list(range(10))


def test_star_cannot_have_a_perfect_matching():
    assert perfect_matching(4, [(0, 1), (0, 2), (0, 3)]) is None


def test_perfect_matching_rejects_odd_order():
    with pytest.raises(ValueError):
        perfect_matching(5, [(0, 1)])


def test_maximum_matching_rejects_loops_and_range_errors():
    with pytest.raises(ValueError):
        maximum_matching(3, [(1, 1)])
    with pytest.raises(ValueError):
        maximum_matching(3, [(0, 3)])


def test_duplicate_and_reversed_edges_are_tolerated():
    match = maximum_matching(4, [(0, 1), (1, 0), (0, 1), (2, 3)])
    assert matching_size(match) == 2


def test_random_sweep_agrees_with_brute_force():
    """Seeded Erdos-Renyi graphs on up to 9 vertices, exact size comparison."""
    rng = Random(20250812)
    for trial in range(120):
        n = rng.randint(2, 9)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        match = maximum_matching(n, edges)
        check_valid(match, edges, n)
        assert matching_size(match) == brute_force_matching_size(n, edges), (
            f"trial {trial}: n={n} edges={edges}"
        )


def test_bipartite_fixture_with_forced_augmentation():
    # left 0 and 1 both prefer right 0; Kuhn must reroute one of them
    match = bipartite_maximum_matching(3, 3, [[0], [0, 1], [1, 2]])
    assert match == [0, 1, 2]


def test_bipartite_no_edges_and_validation():
    assert bipartite_maximum_matching(2, 2, [[], []]) == [-1, -1]
    with pytest.raises(ValueError):
        bipartite_maximum_matching(2, 2, [[0]])
    with pytest.raises(ValueError):
        bipartite_maximum_matching(1, 1, [[5]])


def brute_force_bipartite_size(n_left, n_right, adjacency):
    """Try all injections of a subset of left into right, n small."""
    best = 0
    sides = list(range(n_right))
    for k in range(min(n_left, n_right), 0, -1):
        if k <= best:
            break
        found = False
        for lefts in combinations(range(n_left), k):
            for rights in permutations(sides, k):
                if all(rights[i] in adjacency[lefts[i]] for i in range(k)):
                    best = k
                    found = True
                    break
            if found:
                break
    return best


def test_bipartite_random_sweep_agrees_with_brute_force():
    rng = Random(99)
    for _ in range(80):
        nl = rng.randint(1, 5)
        nr = rng.randint(1, 5)
        adjacency = [
            sorted(v for v in range(nr) if rng.random() < 0.5) for _ in range(nl)
        ]
        match = bipartite_maximum_matching(nl, nr, adjacency)
        size = sum(1 for v in match if v != -1)
        rights = [v for v in match if v != -1]
        assert len(set(rights)) == len(rights)
        for u, v in enumerate(match):
            if v != -1:
                assert v in adjacency[u]
        assert size == brute_force_bipartite_size(nl, nr, adjacency)
