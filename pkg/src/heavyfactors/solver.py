"""Exact decision procedures for heavy clique factors.

Everything here is complete search over exact rationals: a backtracking
cover search over the heavy r-sets, a brute-force enumerator of all block
partitions used as its oracle, the per-vertex heavy-clique counting bound,
the r-uniform hypergraph view (heavy sets become hyperedges, factors become
perfect matchings), and exhaustive enumeration of maximum heavy collections
together with the structural checks a maximum must satisfy.

A heavy collection is a family of disjoint heavy r-blocks, compared first by
size and then by the number of overweight edges lying inside a block.  At a
maximum of that order an exchange argument pins down a lot of structure
around any r uncovered vertices; `check_facts_at_maximum` verifies all of it
and returns witnesses for anything that fails.  A failure on a genuine
maximum means a strictly better collection exists, so it is always a bug
witness, never an expected outcome.

The backtracking search anchors the uncovered vertex with the fewest live
candidate blocks (ties to the smallest index) and tries that vertex's
candidates in lexicographic order.  The scan that picks the anchor doubles as
the fail-fast prune: any uncovered vertex with no live candidate kills the
node immediately.  Counts of explored nodes are recorded so certificates can
say how hard an instance was.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from .core import (
    CapExceededError,
    CliqueFactor,
    FactorParams,
    WeightedCompleteGraph,
    format_rational,
    is_heavy,
)

DEFAULT_SOLVER_CAP = 12
DEFAULT_ENUMERATION_CAP = 10


@dataclass(frozen=True)
class SolveCertificate:
    """Outcome of a complete search: a factor, or a proof of exhaustion.

    `nodes_explored` counts search-tree nodes (root included), so re-running
    the solver on the same input reproduces the certificate exactly.
    """

    params: FactorParams
    strict: bool
    factor: CliqueFactor | None
    nodes_explored: int
    method: str = "backtrack"

    @property
    def outcome(self) -> str:
        return "factor" if self.factor is not None else "exhausted"

    def to_json(self) -> dict:
        doc = {
            "outcome": self.outcome,
            "strict": self.strict,
            "nodes_explored": self.nodes_explored,
            "method": self.method,
            "r": self.params.r,
            "t": format_rational(self.params.t),
        }
        doc["factor"] = (
            None if self.factor is None else [sorted(b) for b in self.factor.blocks]
        )
        return doc


def enumerate_all_factors(n: int, r: int, cap: int = DEFAULT_SOLVER_CAP) -> Iterator[tuple]:
    """Stream every partition of {0..n-1} into blocks of size r, exactly once.

    Canonical form: each block is a sorted tuple led by the smallest vertex
    not in any earlier block.  This is the independent oracle the search-based
    solvers are tested against, so it deliberately shares no code with them.
    The count for n, r is (n)! / ((r!)^(n/r) (n/r)!); n above `cap` raises
    instead of silently enumerating forever.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    if n % r != 0:
        raise ValueError(f"r={r} does not divide n={n}")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds enumeration cap {cap}")

    def gen(remaining: tuple) -> Iterator[tuple]:
        if not remaining:
            yield ()
            return
        anchor = remaining[0]
        pool = remaining[1:]
        for rest in combinations(pool, r - 1):
            block = (anchor,) + rest
            taken = set(rest)
            tail = tuple(v for v in pool if v not in taken)
            for rest_blocks in gen(tail):
                yield (block,) + rest_blocks

    return gen(tuple(range(n)))


def _heavy_sets(graph: WeightedCompleteGraph, params: FactorParams, strict: bool) -> list[tuple]:
    bar = params.heavy_threshold
    out = []
    for vs in combinations(range(graph.n), params.r):
        w = graph.clique_weight(vs)
        if (w > bar) if strict else (w >= bar):
            out.append(vs)
    return out


def _cover_search(n: int, sets: list[tuple]) -> tuple[list[tuple] | None, int]:
    """Exact cover of {0..n-1} by disjoint sets drawn from `sets`.

    Fewest-live-candidates vertex is branched on; candidate order within a
    vertex follows the (lexicographic) order of `sets`.  Returns the chosen
    sets and the number of nodes explored.
    """
    masks = []
    for s in sets:
        m = 0
        for v in s:
            m |= 1 << v
        masks.append(m)
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for idx, s in enumerate(sets):
        for v in s:
            by_vertex[v].append(idx)
    full = (1 << n) - 1
    chosen: list[int] = []
    nodes = 0

    def search(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if covered == full:
            return True
        best_live = None
        rem = full & ~covered
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            live = [i for i in by_vertex[v] if not masks[i] & covered]
            if not live:
                return False
            if best_live is None or len(live) < len(best_live):
                best_live = live
        for i in best_live:
            chosen.append(i)
            if search(covered | masks[i]):
                return True
            chosen.pop()
        return False

    found = search(0)
    return ([sets[i] for i in chosen] if found else None, nodes)


def find_heavy_factor(graph: WeightedCompleteGraph, params: FactorParams,
                      strict: bool = False) -> SolveCertificate:
    """Complete backtracking search for a factor of heavy r-blocks.

    The returned certificate either carries a factor whose every block meets
    the (strictness-dependent) bar, or proves none exists.
    """
    n, r = graph.n, params.r
    if n % r != 0:
        raise ValueError(f"r={r} does not divide n={n}")
    sets = _heavy_sets(graph, params, strict)
    blocks, nodes = _cover_search(n, sets)
    factor = None
    if blocks is not None:
        factor = CliqueFactor.from_blocks(blocks)
        factor.validate(n, r)
    return SolveCertificate(params=params, strict=strict, factor=factor,
                            nodes_explored=nodes)


def heavy_cliques_containing(graph: WeightedCompleteGraph, v: int,
                             params: FactorParams, strict: bool = False) -> int:
    """Count of heavy r-sets through v (the quantity the counting bound floors)."""
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")
    bar = params.heavy_threshold
    others = [u for u in range(graph.n) if u != v]
    count = 0
    for rest in combinations(others, params.r - 1):
        w = graph.clique_weight((v,) + rest)
        if (w > bar) if strict else (w >= bar):
            count += 1
    return count


def lemma1_bound(delta, t, r: int, n: int) -> Fraction:
    """Counting floor ((delta - t) / (1 - t)) * C(n-1, r-1) on heavy r-sets per vertex.

    Valid whenever the graph's minimum weighted degree is at least delta * n;
    t = 1 would divide by zero and is rejected.
    """
    if r < 3:
        raise ValueError(f"the counting bound needs r >= 3, got r={r}")
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    dd = Fraction(delta)
    tt = Fraction(t)
    if not 0 <= dd <= 1:
        raise ValueError(f"delta={dd} outside [0, 1]")
    if not 0 <= tt < 1:
        raise ValueError(f"need 0 <= t < 1, got t={tt}")
    return (dd - tt) / (1 - tt) * comb(n - 1, r - 1)


@dataclass(frozen=True)
class HeavyHypergraph:
    """r-uniform hypergraph whose hyperedges are the heavy r-sets."""

    n: int
    edges: frozenset  # frozenset of frozensets

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def build_heavy_hypergraph(graph: WeightedCompleteGraph, params: FactorParams,
                           strict: bool = False) -> HeavyHypergraph:
    """Hypergraph view: factors of the weighting = perfect matchings here."""
    sets = _heavy_sets(graph, params, strict)
    return HeavyHypergraph(n=graph.n, edges=frozenset(frozenset(s) for s in sets))


def hypergraph_perfect_matching(hypergraph: HeavyHypergraph, r: int) -> tuple | None:
    """Perfect matching (disjoint hyperedges covering every vertex) or None."""
    n = hypergraph.n
    if n % r != 0:
        raise ValueError(f"r={r} does not divide n={n}")
    for e in hypergraph.edges:
        if len(e) != r:
            raise ValueError(f"hyperedge {sorted(e)} does not have size {r}")
    sets = hypergraph.sorted_edges()
    blocks, _nodes = _cover_search(n, sets)
    if blocks is None:
        return None
    return tuple(frozenset(b) for b in blocks)


def daykin_haggkvist_check(hypergraph: HeavyHypergraph, r: int) -> bool:
    """Degree test sufficient for a perfect matching in an r-uniform hypergraph.

    True when every vertex degree is at least (1 - 1/r)(C(n-1, r-1) - 1).
    Sufficiency holds when r divides n; the test itself is just the degree
    comparison.
    """
    n = hypergraph.n
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    bound = Fraction(r - 1, r) * (comb(n - 1, r - 1) - 1)
    return all(hypergraph.degree(v) >= bound for v in range(n))


@dataclass(frozen=True)
class HeavyCollection:
    """Disjoint heavy r-blocks plus the count of overweight edges inside them.

    The count is the secondary objective: among collections of maximum size,
    the maxima additionally maximize how many overweight edges (single edges
    already meeting the r-block bar) sit inside a block.
    """

    blocks: tuple[frozenset, ...]
    overweight_count: int

    @classmethod
    def from_blocks(cls, blocks, overweight_count: int) -> "HeavyCollection":
        canon = tuple(sorted((frozenset(b) for b in blocks), key=lambda b: sorted(b)))
        return cls(canon, overweight_count)

    @property
    def covered(self) -> frozenset:
        out = frozenset()
        for b in self.blocks:
            out |= b
        return out

    @property
    def size(self) -> int:
        return len(self.blocks)


def _block_overweight_count(graph: WeightedCompleteGraph, params: FactorParams,
                            block) -> int:
    bar = params.heavy_threshold
    return sum(1 for a, b in combinations(sorted(block), 2) if graph.weight(a, b) >= bar)


def enumerate_maximum_heavy_collections(graph: WeightedCompleteGraph, params: FactorParams,
                                        cap: int = DEFAULT_ENUMERATION_CAP) -> list[HeavyCollection]:
    """All collections maximizing (size, within-block overweight edges).

    Complete enumeration over subsets of disjoint heavy blocks; n above `cap`
    raises rather than starting an infeasible enumeration.  When no heavy
    block exists at all, the unique maximum is the empty collection.
    """
    n = graph.n
    if n > cap:
        raise CapExceededError(f"n={n} exceeds enumeration cap {cap}")
    sets = _heavy_sets(graph, params, strict=False)
    masks = []
    owc = []
    for s in sets:
        m = 0
        for v in s:
            m |= 1 << v
        masks.append(m)
        owc.append(_block_overweight_count(graph, params, s))

    best_key = (-1, -1)
    best: list[tuple] = []

    def rec(start: int, covered: int, size: int, weight_hits: int, chosen: tuple) -> None:
        nonlocal best_key, best
        key = (size, weight_hits)
        if key > best_key:
            best_key = key
            best = [chosen]
        elif key == best_key:
            best.append(chosen)
        for idx in range(start, len(sets)):
            if masks[idx] & covered:
                continue
            rec(idx + 1, covered | masks[idx], size + 1, weight_hits + owc[idx],
                chosen + (idx,))

    rec(0, 0, 0, 0, ())
    out = [
        HeavyCollection.from_blocks([sets[i] for i in chosen], best_key[1])
        for chosen in best
    ]
    out.sort(key=lambda c: tuple(sorted(b) for b in c.blocks))
    return out


@dataclass(frozen=True)
class StructureViolation:
    kind: str
    detail: str
    witness: tuple


@dataclass(frozen=True)
class StructureReport:
    """Result of the maximum-collection structure checks.

    `saturated_blocks` are the blocks with at least r-1 overweight edges into
    the designated uncovered r-set L; each has a unique `anchor` vertex that
    all its overweight edges meet.  `spare_vertices` are the non-anchor
    vertices of saturated blocks.  An empty violation list is the expected
    outcome on any true maximum.
    """

    violations: tuple
    saturated_blocks: tuple
    anchors: tuple  # (block, anchor) pairs aligned with saturated_blocks
    spare_vertices: frozenset

    @property
    def ok(self) -> bool:
        return not self.violations


def check_facts_at_maximum(graph: WeightedCompleteGraph, params: FactorParams,
                           collection: HeavyCollection, designated) -> StructureReport:
    """Verify the exchange-argument structure at a maximum heavy collection.

    `designated` is an r-set L of uncovered vertices.  Checks, with witnesses
    on failure:

    * no overweight edge joins two uncovered vertices;
    * in any block, all overweight edges into L share one block endpoint;
    * in a saturated block, every overweight edge inside the block or into L
      meets the anchor, and all r-1 anchor edges inside the block are
      themselves overweight;
    * a spare vertex sends at most one overweight edge into any unsaturated
      block;
    * no L-vertex forms a heavy r-set with r-1 spare vertices.
    """
    n, r = graph.n, params.r
    bar = params.heavy_threshold
    covered = set()
    for block in collection.blocks:
        if len(block) != r:
            raise ValueError(f"block {sorted(block)} does not have size {r}")
        if covered & block:
            raise ValueError(f"block {sorted(block)} overlaps another block")
        if not is_heavy(graph, block, params):
            raise ValueError(f"block {sorted(block)} is not heavy")
        covered |= block
    uncovered = set(range(n)) - covered
    if len(uncovered) < r:
        raise ValueError(
            f"need at least r={r} uncovered vertices, got {len(uncovered)}"
        )
    dset = sorted(designated)
    if len(dset) != r or len(set(dset)) != r:
        raise ValueError(f"designated set must contain r={r} distinct vertices")
    if not set(dset) <= uncovered:
        raise ValueError("designated set must consist of uncovered vertices")

    def overweight(a: int, b: int) -> bool:
        return graph.weight(a, b) >= bar

    violations = []

    for a, b in combinations(sorted(uncovered), 2):
        if overweight(a, b):
            violations.append(StructureViolation(
                kind="uncovered-overweight-edge",
                detail=f"edge ({a}, {b}) of weight {format_rational(graph.weight(a, b))} "
                       "joins two uncovered vertices",
                witness=(a, b),
            ))

    saturated = []
    anchors = []
    spare = set()
    for block in collection.blocks:
        cross = [(u, w) for u in sorted(block) for w in dset if overweight(u, w)]
        if not cross:
            continue
        endpoints = {u for u, _ in cross}
        if len(endpoints) > 1:
            violations.append(StructureViolation(
                kind="attachment-not-unique",
                detail=f"block {sorted(block)} has overweight edges into the designated "
                       f"set from multiple vertices {sorted(endpoints)}",
                witness=(tuple(sorted(block)), tuple(sorted(endpoints))),
            ))
            continue
        anchor = endpoints.pop()
        if len(cross) >= r - 1:
            saturated.append(block)
            anchors.append((block, anchor))
            spare |= block - {anchor}
            for a, b in combinations(sorted(block), 2):
                if overweight(a, b) and anchor not in (a, b):
                    violations.append(StructureViolation(
                        kind="saturated-anchor-misses-overweight-edge",
                        detail=f"overweight edge ({a}, {b}) inside saturated block "
                               f"{sorted(block)} avoids the anchor {anchor}",
                        witness=(a, b, anchor),
                    ))
            for u in sorted(block - {anchor}):
                if not overweight(anchor, u):
                    violations.append(StructureViolation(
                        kind="saturated-anchor-edge-not-overweight",
                        detail=f"anchor edge ({anchor}, {u}) in saturated block "
                               f"{sorted(block)} weighs only "
                               f"{format_rational(graph.weight(anchor, u))}",
                        witness=(anchor, u),
                    ))

    saturated_set = {frozenset(b) for b in saturated}
    for y in sorted(spare):
        for block in collection.blocks:
            if frozenset(block) in saturated_set:
                continue
            hits = [u for u in sorted(block) if overweight(y, u)]
            if len(hits) >= 2:
                violations.append(StructureViolation(
                    kind="spare-double-overweight",
                    detail=f"spare vertex {y} sends {len(hits)} overweight edges into "
                           f"unsaturated block {sorted(block)}",
                    witness=(y, tuple(sorted(block)), tuple(hits)),
                ))

    spare_sorted = sorted(spare)
    for v in dset:
        for rest in combinations(spare_sorted, r - 1):
            if is_heavy(graph, (v,) + rest, params):
                violations.append(StructureViolation(
                    kind="heavy-block-on-spares",
                    detail=f"designated vertex {v} forms a heavy block with spare "
                           f"vertices {list(rest)}",
                    witness=(v,) + rest,
                ))

    return StructureReport(
        violations=tuple(violations),
        saturated_blocks=tuple(tuple(sorted(b)) for b in saturated),
        anchors=tuple((tuple(sorted(b)), a) for b, a in anchors),
        spare_vertices=frozenset(spare),
    )


def t_r_threshold(r: int) -> Fraction:
    """Level below which the counting floor already beats the matching bound.

    Closed form 4 / (C(r, 2) (r^3 - r^2 - 2r + 4)); defined for r >= 3.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got r={r}")
    return Fraction(4, comb(r, 2) * (r ** 3 - r ** 2 - 2 * r + 4))
