"""Exact-rational weighted complete graphs and the heaviness vocabulary.

An edge weighting of the complete graph K_n assigns every unordered pair a
weight in [0, 1].  Everything here is exact: weights, degrees, and clique
weights are `fractions.Fraction` values and the heavy / overweight predicates
compare them with no floating point anywhere.  For clique size r and level t,
an r-set is heavy when its total edge weight reaches t * C(r, 2); the strict
variant demands strictly more.  The boundary matters: the two families of
weightings that pin the extremal threshold differ exactly in whether ties
count, so both predicates are first-class and every caller says which one it
means.

Graphs are immutable values.  Derived graphs (scaled, induced, single edge
replaced) are new objects, which keeps certificates trivially re-checkable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class GraphFormatError(ValueError):
    """A graph JSON document is malformed; message names the offending field."""


class CapExceededError(RuntimeError):
    """An enumeration or solver cap would be exceeded; raised, never truncated."""


class BudgetExceededError(RuntimeError):
    """A retry or resample budget ran out before producing a feasible result."""


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer string) into a Fraction.

    Decimal and scientific notation are rejected: weights travel end-to-end as
    exact rationals and a silent float would defeat every boundary test.
    """
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational")
    if any(c in s for c in ".eE"):
        raise ValueError(f"decimal notation is not accepted: {text!r}")
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator: {text!r}") from exc
    except ValueError as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value) -> str:
    """Serialize a rational as "num/den", denominator always printed."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _coerce_weight(w, where: str) -> Fraction:
    if isinstance(w, float):
        raise ValueError(f"{where}: float weights are not accepted, use Fraction")
    f = Fraction(w)
    if f < 0 or f > 1:
        raise ValueError(f"{where}: weight {f} outside [0, 1]")
    return f


class WeightedCompleteGraph:
    """Complete graph on vertices 0..n-1 with symmetric rational edge weights.

    Weights are stored once per unordered pair; `weight(i, j)` accepts either
    orientation.  Vertex degrees and the total weight are computed eagerly so
    repeated min-degree queries (the adversarial search does thousands) stay
    cheap.
    """

    __slots__ = ("n", "_w", "_deg")

    def __init__(self, n: int, weights: Mapping[tuple[int, int], Fraction] | None = None):
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        self.n = n
        flat = [ZERO] * (n * (n - 1) // 2)
        if weights:
            for (i, j), w in weights.items():
                if not (0 <= i < n and 0 <= j < n) or i == j:
                    raise ValueError(f"invalid vertex pair ({i}, {j}) for n={n}")
                flat[self._idx(i, j)] = _coerce_weight(w, f"edge ({i}, {j})")
        self._w = tuple(flat)
        deg = [ZERO] * n
        for (i, j), w in zip(self.pairs(), self._w):
            deg[i] += w
            deg[j] += w
        self._deg = tuple(deg)

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[Fraction]) -> "WeightedCompleteGraph":
        g = cls.__new__(cls)
        if len(flat) != n * (n - 1) // 2:
            raise ValueError("flat weight vector has wrong length")
        g.n = n
        g._w = tuple(_coerce_weight(w, "edge") for w in flat)
        deg = [ZERO] * n
        for (i, j), w in zip(g.pairs(), g._w):
            deg[i] += w
            deg[j] += w
        g._deg = tuple(deg)
        return g

    @classmethod
    def constant(cls, n: int, w) -> "WeightedCompleteGraph":
        ww = _coerce_weight(w, "constant weight")
        return cls.from_flat(n, [ww] * (n * (n - 1) // 2))

    def _idx(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return i * (2 * self.n - i - 1) // 2 + (j - i - 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All unordered pairs (i, j) with i < j in lexicographic order."""
        return combinations(range(self.n), 2)

    def weight(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.n and 0 <= j < self.n) or i == j:
            raise ValueError(f"invalid vertex pair ({i}, {j}) for n={self.n}")
        return self._w[self._idx(i, j)]

    def weighted_degree(self, v: int) -> Fraction:
        """Sum of the weights of all n-1 edges at v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self._deg[v]

    def min_weighted_degree(self) -> Fraction:
        if self.n < 2:
            raise ValueError("min weighted degree needs at least two vertices")
        return min(self._deg)

    def weighted_degree_to(self, v: int, targets: Iterable[int]) -> Fraction:
        """Sum of weights from v into the vertex set `targets` (v excluded)."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        total = ZERO
        seen = set()
        for u in targets:
            if u == v:
                raise ValueError(f"target set contains the source vertex {v}")
            if u in seen:
                raise ValueError(f"duplicate target vertex {u}")
            seen.add(u)
            total += self.weight(v, u)
        return total

    def clique_weight(self, vertices: Iterable[int]) -> Fraction:
        """Total edge weight inside the vertex set (needs at least 2 vertices)."""
        vs = sorted(vertices)
        if len(vs) < 2:
            raise ValueError("clique weight needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("clique vertex set contains duplicates")
        total = ZERO
        for a, b in combinations(vs, 2):
            total += self.weight(a, b)
        return total

    def total_weight(self) -> Fraction:
        return sum(self._w, ZERO)

    def scale(self, factor) -> "WeightedCompleteGraph":
        """Multiply every weight by `factor` in [0, 1]; exact, no rounding."""
        f = Fraction(factor)
        if f < 0 or f > 1:
            raise ValueError(f"scale factor {f} outside [0, 1]")
        return WeightedCompleteGraph.from_flat(self.n, [w * f for w in self._w])

    def with_weight(self, i: int, j: int, w) -> "WeightedCompleteGraph":
        """New graph equal to this one except for the single edge (i, j)."""
        idx = self._idx(i, j)
        if i == j or not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"invalid vertex pair ({i}, {j}) for n={self.n}")
        flat = list(self._w)
        flat[idx] = _coerce_weight(w, f"edge ({i}, {j})")
        return WeightedCompleteGraph.from_flat(self.n, flat)

    def threshold_subgraph(self, s) -> "ThresholdGraph":
        """Unweighted graph keeping exactly the edges of weight >= s."""
        thr = Fraction(s)
        edges = tuple(p for p, w in zip(self.pairs(), self._w) if w >= thr)
        return ThresholdGraph(self.n, thr, edges)

    def induced(self, vertices: Iterable[int]) -> tuple["WeightedCompleteGraph", tuple[int, ...]]:
        """Induced sub-weighting plus the sorted vertex map back to this graph."""
        vs = tuple(sorted(vertices))
        if len(vs) < 1 or len(set(vs)) != len(vs):
            raise ValueError("induced vertex set must be nonempty and duplicate-free")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise ValueError("induced vertex set out of range")
        flat = [self._w[self._idx(a, b)] for a, b in combinations(vs, 2)]
        return WeightedCompleteGraph.from_flat(len(vs), flat), vs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightedCompleteGraph)
            and self.n == other.n
            and self._w == other._w
        )

    def __hash__(self) -> int:
        return hash((self.n, self._w))

    def __repr__(self) -> str:
        return f"WeightedCompleteGraph(n={self.n})"


class ThresholdGraph:
    """Unweighted graph produced by keeping the edges at or above a threshold."""

    __slots__ = ("n", "threshold", "edges", "_adj")

    def __init__(self, n: int, threshold: Fraction, edges: Iterable[tuple[int, int]]):
        self.n = n
        self.threshold = Fraction(threshold)
        canon = []
        adj = [set() for _ in range(n)]
        for i, j in edges:
            if i > j:
                i, j = j, i
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"invalid edge ({i}, {j}) for n={n}")
            canon.append((i, j))
            adj[i].add(j)
            adj[j].add(i)
        self.edges = tuple(sorted(set(canon)))
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        if self.n < 1:
            raise ValueError("empty graph")
        return min(len(s) for s in self._adj)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]


@dataclass(frozen=True)
class FactorParams:
    """Clique size r >= 2 and weight level t in [0, 1].

    `heavy_threshold` is the derived bar t * C(r, 2) an r-set's total edge
    weight is compared against; single edges are compared against the same bar
    for the overweight predicate.
    """

    r: int
    t: Fraction
    heavy_threshold: Fraction = None  # type: ignore[assignment]  # derived below

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 2:
            raise ValueError(f"clique size r must be an integer >= 2, got {self.r!r}")
        if isinstance(self.t, float):
            raise ValueError("t must be an exact rational, not a float")
        t = Fraction(self.t)
        if t < 0 or t > 1:
            raise ValueError(f"level t={t} outside [0, 1]")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "heavy_threshold", t * comb(self.r, 2))


def is_heavy(graph: WeightedCompleteGraph, vertices: Iterable[int], params: FactorParams) -> bool:
    """True when the r-set's total edge weight is at least t * C(r, 2)."""
    vs = tuple(vertices)
    if len(vs) != params.r:
        raise ValueError(f"expected {params.r} vertices, got {len(vs)}")
    return graph.clique_weight(vs) >= params.heavy_threshold


def is_strictly_heavy(graph: WeightedCompleteGraph, vertices: Iterable[int], params: FactorParams) -> bool:
    """True when the r-set's total edge weight exceeds t * C(r, 2)."""
    vs = tuple(vertices)
    if len(vs) != params.r:
        raise ValueError(f"expected {params.r} vertices, got {len(vs)}")
    return graph.clique_weight(vs) > params.heavy_threshold


def is_overweight_edge(graph: WeightedCompleteGraph, edge: tuple[int, int], params: FactorParams) -> bool:
    """True when a single edge already carries t * C(r, 2) on its own.

    For t * C(r, 2) > 1 no edge can qualify; the predicate is then constantly
    False rather than an error, since callers probe arbitrary parameter boxes.
    """
    i, j = edge
    return graph.weight(i, j) >= params.heavy_threshold


@dataclass(frozen=True)
class CliqueFactor:
    """Partition of the vertex set into equal-size blocks, one clique each.

    Blocks are canonicalized: each is a frozenset, ordered by smallest member.
    """

    blocks: tuple[frozenset, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "CliqueFactor":
        canon = tuple(sorted((frozenset(b) for b in blocks), key=min))
        return cls(canon)

    @property
    def covered(self) -> frozenset:
        out = frozenset()
        for b in self.blocks:
            out |= b
        return out

    def validate(self, n: int, r: int) -> None:
        """Raise unless the blocks partition {0..n-1} into n/r sets of size r."""
        if n % r != 0:
            raise ValueError(f"r={r} does not divide n={n}")
        if len(self.blocks) != n // r:
            raise ValueError(f"expected {n // r} blocks, got {len(self.blocks)}")
        seen = set()
        for b in self.blocks:
            if len(b) != r:
                raise ValueError(f"block {sorted(b)} does not have size {r}")
            if seen & b:
                raise ValueError(f"block {sorted(b)} overlaps an earlier block")
            seen |= b
        if seen != set(range(n)):
            raise ValueError("blocks do not cover every vertex exactly once")

    def block_weights(self, graph: WeightedCompleteGraph) -> tuple[Fraction, ...]:
        return tuple(graph.clique_weight(b) for b in self.blocks)


def graph_to_json(graph: WeightedCompleteGraph) -> dict:
    """JSON document for a weighting; every pair is written explicitly."""
    return {
        "n": graph.n,
        "edges": [[i, j, format_rational(graph.weight(i, j))] for i, j in graph.pairs()],
    }


def graph_from_json(doc) -> WeightedCompleteGraph:
    """Parse and validate the JSON graph document; missing pairs default to 0."""
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    if "n" not in doc:
        raise GraphFormatError("missing field 'n'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphFormatError(f"field 'n' must be a positive integer, got {n!r}")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("field 'edges' must be a list")
    weights = {}
    for pos, entry in enumerate(edges):
        where = f"edges[{pos}]"
        if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
            raise GraphFormatError(f"{where}: expected [i, j, \"num/den\"]")
        i, j, wtext = entry
        if not (isinstance(i, int) and isinstance(j, int)) or isinstance(i, bool) or isinstance(j, bool):
            raise GraphFormatError(f"{where}: vertex indices must be integers")
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"{where}: invalid pair ({i}, {j}) for n={n}")
        key = (min(i, j), max(i, j))
        if key in weights:
            raise GraphFormatError(f"{where}: duplicate pair ({key[0]}, {key[1]})")
        try:
            w = parse_rational(wtext)
        except ValueError as exc:
            raise GraphFormatError(f"{where}: {exc}") from exc
        if w < 0 or w > 1:
            raise GraphFormatError(f"{where}: weight {format_rational(w)} outside [0, 1]")
        weights[key] = w
    return WeightedCompleteGraph(n, weights)


def save_graph(path, graph: WeightedCompleteGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(graph_to_json(graph)))


def load_graph(path) -> WeightedCompleteGraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return graph_from_json(doc)


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation, no timestamps."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
