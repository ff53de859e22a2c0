"""Shared domain model for bichromatic arc graphs.

Two instance kinds are supported.  Collinear instances are colored points
on the spine y=0 with strictly increasing x coordinates; edges between
them are circular arcs drawn in the upper or lower halfplane and weighted
by the Euclidean distance of their endpoints.  Circle instances are 2n
equidistant points in alternating monochromatic chunks of size k; edges
are chords weighted by the point-count metric (the smaller number of
points on the two arcs between the endpoints, endpoints included).

Point identity is the positional index in sorted (or clockwise) order;
coordinates only enter through weights.  All types are immutable after
construction and every operation here is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence, Union

Weight = Union[int, float]

#: Relative tolerance used when comparing real-valued weights.  Integer
#: coordinates take an exact integer arithmetic path and never need it.
REL_TOL = 1e-9


class UnbalancedInstanceError(ValueError):
    """Solver requires equally many red and blue points."""


class SingleColorError(ValueError):
    """No bichromatic structure exists on a single-color instance."""


class Color(Enum):
    RED = "R"
    BLUE = "B"

    @property
    def complement(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Page(Enum):
    """Halfplane of the spine an arc is drawn in (collinear edges only)."""

    ABOVE = "above"
    BELOW = "below"

    @property
    def opposite(self) -> "Page":
        return Page.BELOW if self is Page.ABOVE else Page.ABOVE


class StructureKind(Enum):
    HAMPATH = "hampath"
    SPANNING_TREE = "spanning_tree"
    MATCHING = "matching"
    TOUR = "tour"


@dataclass(frozen=True)
class CollinearInstance:
    """Colored points on the spine, stored in strictly increasing x order.

    ``xs`` may be all ``int`` (exact arithmetic throughout) or contain
    floats.  No collocated points are allowed.
    """

    xs: tuple
    colors: tuple

    def __post_init__(self) -> None:
        if len(self.xs) != len(self.colors):
            raise ValueError("coordinate/color length mismatch")
        if len(self.xs) < 2:
            raise ValueError("an instance needs at least 2 points")
        for a, b in zip(self.xs, self.xs[1:]):
            if not a < b:
                raise ValueError("x coordinates must be strictly increasing")
        if any(not isinstance(c, Color) for c in self.colors):
            raise ValueError("colors must be Color values")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "CollinearInstance":
        pts = list(pairs)
        return cls(tuple(x for x, _ in pts), tuple(c for _, c in pts))

    @classmethod
    def from_colors(cls, colors: Sequence[Color], xs=None) -> "CollinearInstance":
        """Unit-spaced instance for a color sequence (or explicit xs)."""
        if xs is None:
            xs = range(len(colors))
        return cls(tuple(xs), tuple(colors))

    @property
    def n_points(self) -> int:
        return len(self.xs)

    def x(self, i: int) -> Weight:
        return self.xs[i]

    def color(self, i: int) -> Color:
        return self.colors[i]

    @property
    def n_red(self) -> int:
        return sum(1 for c in self.colors if c is Color.RED)

    @property
    def n_blue(self) -> int:
        return len(self.colors) - self.n_red

    @property
    def is_balanced(self) -> bool:
        return self.n_red == self.n_blue

    @property
    def is_single_color(self) -> bool:
        return self.n_red == 0 or self.n_blue == 0

    @property
    def integer_coords(self) -> bool:
        return all(isinstance(x, int) for x in self.xs)

    def indices_of(self, color: Color) -> list:
        return [i for i, c in enumerate(self.colors) if c is color]


@dataclass(frozen=True)
class CircleInstance:
    """n red + n blue equidistant points in alternating chunks of size k.

    Positions run 0..2n-1 clockwise; position i carries the color of chunk
    i // k, chunks alternating from ``first_chunk_color``.  Requires k | n,
    giving L = 2n/k chunks.
    """

    n: int
    k: int
    first_chunk_color: Color = Color.RED

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if self.n % self.k:
            raise ValueError("chunk size k must divide n")

    @property
    def n_points(self) -> int:
        return 2 * self.n

    @property
    def num_chunks(self) -> int:
        return 2 * self.n // self.k

    def color(self, i: int) -> Color:
        if not 0 <= i < self.n_points:
            raise IndexError(f"position {i} out of range")
        first = (i // self.k) % 2 == 0
        return self.first_chunk_color if first else self.first_chunk_color.complement

    @property
    def colors(self) -> tuple:
        return tuple(self.color(i) for i in range(self.n_points))

    @property
    def is_balanced(self) -> bool:
        return True


Instance = Union[CollinearInstance, CircleInstance]


@dataclass(frozen=True)
class ArcEdge:
    """Edge between two point indices, normalized to u < v.

    ``page`` is set for collinear arcs and ``None`` for circle chords.
    """

    u: int
    v: int
    page: Page | None = None

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError("self-loops are not allowed")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def pair(self) -> tuple:
        return (self.u, self.v)


def edge_weight_collinear(inst: CollinearInstance, e: ArcEdge) -> Weight:
    """Euclidean distance of the arc's endpoints on the spine."""
    if not 0 <= e.u < e.v < inst.n_points:
        raise IndexError(f"edge ({e.u},{e.v}) out of range")
    return inst.xs[e.v] - inst.xs[e.u]


def edge_weight_circle(inst: CircleInstance, e: ArcEdge) -> int:
    """Point-count metric: min points on either arc, endpoints included.

    Adjacent points have weight 2; the maximum over a 2n-point circle is
    n + 1 (diametral pairs).
    """
    total = inst.n_points
    if not 0 <= e.u < e.v < total:
        raise IndexError(f"edge ({e.u},{e.v}) out of range")
    d = e.v - e.u
    return min(d, total - d) + 1


def edge_weight(inst: Instance, e: ArcEdge) -> Weight:
    if isinstance(inst, CollinearInstance):
        return edge_weight_collinear(inst, e)
    return edge_weight_circle(inst, e)


def arcs_cross(a: ArcEdge, b: ArcEdge) -> bool:
    """True iff the two arcs properly interleave on the same page.

    Arcs sharing an endpoint never cross; nested or disjoint arcs never
    cross; arcs on opposite pages never cross.  With both pages ``None``
    this is exactly chord interleaving on a cycle.
    """
    if a.page != b.page:
        return False
    return a.u < b.u < a.v < b.v or b.u < a.u < b.v < a.v


def weights_close(a: Weight, b: Weight) -> bool:
    """Equality for weights: exact for ints, relative 1e-9 otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=0.0)


@dataclass(frozen=True)
class ArcGraph:
    """Edge set over an instance.  Every edge must be bichromatic and no
    two edges may join the same point pair (even on different pages)."""

    instance: Instance
    edges: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        npts = self.instance.n_points
        seen = set()
        for e in self.edges:
            if not 0 <= e.u < e.v < npts:
                raise IndexError(f"edge ({e.u},{e.v}) out of range")
            if self.instance.color(e.u) == self.instance.color(e.v):
                raise ValueError(f"edge ({e.u},{e.v}) is not bichromatic")
            if e.pair in seen:
                raise ValueError(f"duplicate edge on pair {e.pair}")
            seen.add(e.pair)

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (e.u, e.v))

    def total_weight(self) -> Weight:
        return sum(edge_weight(self.instance, e) for e in self.sorted_edges())


def _one_page_laminar(intervals: list) -> bool:
    """True iff no two intervals properly interleave (shared endpoints ok).

    Stack sweep over intervals sorted by (left asc, right desc); runs in
    O(m log m), equivalent to the pairwise arcs_cross test.
    """
    intervals.sort(key=lambda p: (p[0], -p[1]))
    stack: list = []
    for lo, hi in intervals:
        while stack and stack[-1][1] <= lo:
            stack.pop()
        if stack and stack[-1][0] < lo and stack[-1][1] < hi:
            return False
        stack.append((lo, hi))
    return True


def collinear_has_crossing(edges: Iterable[ArcEdge]) -> bool:
    by_page: dict = {}
    for e in edges:
        by_page.setdefault(e.page, []).append((e.u, e.v))
    return any(not _one_page_laminar(ivs) for ivs in by_page.values())


class _Fenwick:
    def __init__(self, size: int) -> None:
        self.tree = [0] * (size + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i < len(self.tree):
            self.tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        # sum of entries 0..i inclusive
        i += 1
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s

    def range_sum(self, lo: int, hi: int) -> int:
        if lo > hi:
            return 0
        return self.prefix(hi) - (self.prefix(lo - 1) if lo > 0 else 0)


def count_chord_crossings(edges: Iterable[ArcEdge], n_positions: int) -> int:
    """Number of properly interleaving chord pairs on a cycle of positions.

    Shared endpoints do not count.  O(m log n) Fenwick sweep.
    """
    starts: dict = {}
    ends: dict = {}
    for e in edges:
        starts.setdefault(e.u, []).append(e)
        ends.setdefault(e.v, []).append(e)
    bit = _Fenwick(n_positions)
    crossings = 0
    for pos in range(n_positions):
        closing = ends.get(pos, ())
        for e in closing:
            bit.add(e.u, -1)
        for e in closing:
            crossings += bit.range_sum(e.u + 1, pos - 1)
        for e in starts.get(pos, ()):
            bit.add(pos, 1)
    return crossings


def graph_has_crossing(graph: ArcGraph) -> bool:
    if isinstance(graph.instance, CollinearInstance):
        return collinear_has_crossing(graph.edges)
    return count_chord_crossings(graph.edges, graph.instance.n_points) > 0


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple
    noncrossing: bool


def _degree_map(graph: ArcGraph) -> list:
    deg = [0] * graph.instance.n_points
    for e in graph.edges:
        deg[e.u] += 1
        deg[e.v] += 1
    return deg


def _connected_component_count(graph: ArcGraph) -> int:
    n = graph.instance.n_points
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for e in graph.edges:
        ra, rb = find(e.u), find(e.v)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def validate(inst: Instance, graph: ArcGraph, kind: StructureKind) -> ValidationResult:
    """Structural validator shared by all solvers and the oracles.

    Checks that ``graph`` forms the requested structure over every point
    of ``inst`` and independently reports crossing-freeness.
    """
    if graph.instance is not inst and graph.instance != inst:
        raise ValueError("graph references a different instance")
    n = inst.n_points
    deg = _degree_map(graph)
    comps = _connected_component_count(graph)
    violations: list = []

    if kind is StructureKind.HAMPATH:
        if len(graph) != n - 1:
            violations.append(f"path needs {n - 1} edges, got {len(graph)}")
        if any(d > 2 for d in deg):
            violations.append("degree exceeds 2")
        if sum(1 for d in deg if d == 1) != 2:
            violations.append("path must have exactly 2 endpoints")
        if any(d == 0 for d in deg):
            violations.append("isolated point")
        if comps != 1:
            violations.append("not connected")
    elif kind is StructureKind.SPANNING_TREE:
        if len(graph) != n - 1:
            violations.append(f"tree needs {n - 1} edges, got {len(graph)}")
        if comps != 1:
            violations.append("not connected")
    elif kind is StructureKind.MATCHING:
        if any(d != 1 for d in deg):
            violations.append("matching requires degree exactly 1 everywhere")
    elif kind is StructureKind.TOUR:
        if n < 3:
            violations.append("tour needs at least 3 points")
        if any(d != 2 for d in deg):
            violations.append("tour requires degree exactly 2 everywhere")
        if comps != 1:
            violations.append("tour must be a single cycle")
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(f"unknown structure kind {kind}")

    return ValidationResult(
        ok=not violations,
        violations=tuple(violations),
        noncrossing=not graph_has_crossing(graph),
    )


@dataclass(frozen=True)
class SolveReport:
    """Solution edges plus recomputed certification metadata."""

    graph: ArcGraph
    total_weight: Weight
    structure_kind: StructureKind
    noncrossing: bool

    def __post_init__(self) -> None:
        recomputed = self.graph.total_weight()
        if not weights_close(self.total_weight, recomputed):
            raise ValueError("total_weight inconsistent with edge set")

    @classmethod
    def build(cls, inst: Instance, edges: Iterable[ArcEdge],
              kind: StructureKind) -> "SolveReport":
        graph = ArcGraph(inst, frozenset(edges))
        return cls(
            graph=graph,
            total_weight=graph.total_weight(),
            structure_kind=kind,
            noncrossing=not graph_has_crossing(graph),
        )
