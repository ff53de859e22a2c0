"""Independent brute-force solvers used as ground truth at small scale.

None of these call the fast solvers; the dependency direction is enforced
by this module importing only :mod:`bichroma.core`.  Enumerations count
their work against an :class:`OracleBudget` and abort loudly rather than
return a partial answer.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse.csgraph import minimum_spanning_tree as _scipy_mst

from .core import (
    ArcEdge,
    CircleInstance,
    CollinearInstance,
    Color,
    Page,
    SingleColorError,
    UnbalancedInstanceError,
    Weight,
    arcs_cross,
    edge_weight_collinear,
)


class BudgetExceededError(RuntimeError):
    """An enumeration outgrew its budget; no partial answer is returned."""


@dataclass(frozen=True)
class OracleBudget:
    max_points: int = 12
    max_states: int = 10_000_000


DEFAULT_BUDGET = OracleBudget()


class _StateCounter:
    __slots__ = ("count", "limit")

    def __init__(self, limit: int) -> None:
        self.count = 0
        self.limit = limit

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.count > self.limit:
            raise BudgetExceededError(
                f"enumeration exceeded {self.limit} states"
            )


def _check_points(inst, budget: OracleBudget) -> None:
    if inst.n_points > budget.max_points:
        raise BudgetExceededError(
            f"{inst.n_points} points exceed oracle cap {budget.max_points}"
        )


# ---------------------------------------------------------------------------
# Minimum non-crossing perfect matching (single page)


def oracle_matching(inst: CollinearInstance,
                    budget: OracleBudget = DEFAULT_BUDGET):
    """Minimum weight over all one-page non-crossing perfect matchings.

    Recursive block splitting: the first point of a segment pairs with an
    opposite-color point that leaves both sides color-balanced.  Returns
    ``(weight, edges)`` for one argmin matching.
    """
    if not inst.is_balanced:
        raise UnbalancedInstanceError("matching oracle needs |R| = |B|")
    _check_points(inst, budget)
    counter = _StateCounter(budget.max_states)
    colors = inst.colors
    xs = inst.xs
    memo: dict = {}

    def best(lo: int, hi: int):
        if lo > hi:
            return 0, ()
        key = (lo, hi)
        if key in memo:
            return memo[key]
        counter.tick()
        best_w = None
        best_edges = None
        bal = 0
        for j in range(lo, hi + 1):
            bal += 1 if colors[j] is Color.RED else -1
            if bal == 0 and colors[j] is not colors[lo]:
                # interior lo+1..j-1 is balanced, so both sides match up
                w_in, e_in = best(lo + 1, j - 1)
                w_out, e_out = best(j + 1, hi)
                w = (xs[j] - xs[lo]) + w_in + w_out
                if best_w is None or w < best_w:
                    best_w = w
                    best_edges = ((lo, j),) + e_in + e_out
        assert best_w is not None, "balanced segment must admit a matching"
        memo[key] = (best_w, best_edges)
        return memo[key]

    w, pairs = best(0, inst.n_points - 1)
    edges = tuple(ArcEdge(u, v, Page.ABOVE) for u, v in pairs)
    return w, edges


def oracle_matching_exhaustive(inst: CollinearInstance,
                               budget: OracleBudget = DEFAULT_BUDGET) -> Weight:
    """Cross-check for :func:`oracle_matching`: enumerate all red-blue
    pairings and filter one-page crossings.  Only viable for tiny inputs."""
    if not inst.is_balanced:
        raise UnbalancedInstanceError("matching oracle needs |R| = |B|")
    _check_points(inst, budget)
    reds = inst.indices_of(Color.RED)
    blues = inst.indices_of(Color.BLUE)
    counter = _StateCounter(budget.max_states)
    best = None
    for perm in itertools.permutations(blues):
        counter.tick()
        pairs = [(min(r, b), max(r, b)) for r, b in zip(reds, perm)]
        if any(
            a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]
            for a, b in itertools.combinations(pairs, 2)
        ):
            continue
        w = sum(inst.xs[v] - inst.xs[u] for u, v in pairs)
        if best is None or w < best:
            best = w
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Minimum spanning trees


def _chunk_index(colors: Sequence[Color]) -> list:
    idx = [0] * len(colors)
    c = 0
    for i in range(1, len(colors)):
        if colors[i] is not colors[i - 1]:
            c += 1
        idx[i] = c
    return idx


def _candidate_edges(inst: CollinearInstance, consecutive_only: bool) -> list:
    chunk = _chunk_index(inst.colors)
    cands = []
    for u, v in itertools.combinations(range(inst.n_points), 2):
        if inst.colors[u] is inst.colors[v]:
            continue
        if consecutive_only and abs(chunk[u] - chunk[v]) != 1:
            continue
        cands.append((u, v))
    return cands


def oracle_mst_noncrossing(inst: CollinearInstance,
                           budget: OracleBudget = DEFAULT_BUDGET,
                           mode: str = "reduced",
                           required: Iterable[tuple] = ()) -> Weight:
    """Minimum weight over one-page non-crossing bichromatic spanning trees.

    ``mode="reduced"`` restricts candidates to edges between consecutive
    monochromatic chunks (no minimum tree uses anything else); the
    ``"full"`` mode keeps every bichromatic pair and exists to validate
    that reduction at tiny sizes.  ``required`` edges are forced into the
    tree (used to price fills under a fixed outer arc).
    """
    if inst.is_single_color:
        raise SingleColorError("spanning tree needs both colors")
    _check_points(inst, budget)
    if mode not in ("reduced", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    n = inst.n_points
    xs = inst.xs
    counter = _StateCounter(budget.max_states)

    required = [tuple(sorted(p)) for p in required]
    cands = [p for p in _candidate_edges(inst, mode == "reduced")
             if p not in required]
    cands.sort(key=lambda p: xs[p[1]] - xs[p[0]])
    order = required + cands
    weights = [xs[v] - xs[u] for u, v in order]
    crosses = []
    for i, (u, v) in enumerate(order):
        mask = 0
        for j, (w, x) in enumerate(order):
            if u < w < v < x or w < u < x < v:
                mask |= 1 << j
        crosses.append(mask)

    best = math.inf

    def find(parent: list, a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def rec(idx: int, chosen_mask: int, parent: list, count: int,
            weight: float) -> None:
        nonlocal best
        counter.tick()
        if count == n - 1:
            best = min(best, weight)
            return
        if idx == len(order) or weight >= best:
            return
        if count + (len(order) - idx) < n - 1:
            return
        u, v = order[idx]
        forced = idx < len(required)
        if not (crosses[idx] & chosen_mask):
            ru, rv = find(parent, u), find(parent, v)
            if ru != rv:
                child = list(parent)
                child[ru] = rv
                rec(idx + 1, chosen_mask | (1 << idx), child, count + 1,
                    weight + weights[idx])
            elif forced:
                return
        elif forced:
            return
        if not forced:
            rec(idx + 1, chosen_mask, parent, count, weight)

    rec(0, 0, list(range(n)), 0, 0)
    if not math.isfinite(best):
        raise ValueError("no non-crossing spanning tree under the constraints")
    return best


def oracle_mst_crossing(inst: CollinearInstance) -> float:
    """Textbook MST of the complete bipartite graph with Euclidean weights.

    Backed by scipy's csgraph solver; crossings are allowed so this is the
    plain graph-theoretic minimum.
    """
    if inst.is_single_color:
        raise SingleColorError("spanning tree needs both colors")
    xs = np.asarray(inst.xs, dtype=float)
    red = np.array([c is Color.RED for c in inst.colors])
    w = np.abs(xs[:, None] - xs[None, :])
    w[red[:, None] == red[None, :]] = 0.0  # same color: no edge
    tree = _scipy_mst(w)
    assert tree.nnz == inst.n_points - 1, "bipartite graph must be connected"
    return float(tree.sum())


# ---------------------------------------------------------------------------
# Traveling salesman tours on the circle


def circle_distance(total: int, u: int, v: int) -> int:
    d = abs(u - v)
    return min(d, total - d) + 1


def oracle_tour_min(colors: Sequence[Color],
                    budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum bichromatic tour weight over a circular color sequence in
    the point-count metric, by enumerating all alternating cycles."""
    total = len(colors)
    if total > budget.max_points:
        raise BudgetExceededError(
            f"{total} points exceed oracle cap {budget.max_points}"
        )
    reds = [i for i, c in enumerate(colors) if c is Color.RED]
    blues = [i for i, c in enumerate(colors) if c is Color.BLUE]
    if len(reds) != len(blues):
        raise UnbalancedInstanceError("a bichromatic tour needs |R| = |B|")
    n = len(reds)
    if n < 2:
        raise ValueError("tour enumeration needs at least 4 points")
    n_cycles = math.factorial(n - 1) * math.factorial(n)
    if n_cycles > budget.max_states:
        raise BudgetExceededError(f"{n_cycles} cycles exceed budget")

    best = math.inf
    first = reds[0]
    rest = reds[1:]
    for perm_r in itertools.permutations(rest):
        ring_r = (first,) + perm_r
        for perm_b in itertools.permutations(blues):
            w = 0
            for i in range(n):
                w += circle_distance(total, ring_r[i], perm_b[i])
                w += circle_distance(total, perm_b[i], ring_r[(i + 1) % n])
            if w < best:
                best = w
    return int(best)


def oracle_tsp_circle(inst: CircleInstance,
                      budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return oracle_tour_min(inst.colors, budget)


# ---------------------------------------------------------------------------
# Non-crossing Hamiltonian path existence


class PageSet(Enum):
    ONE_ABOVE = "one_above"
    TWO = "two"

    @property
    def pages(self) -> tuple:
        if self is PageSet.ONE_ABOVE:
            return (Page.ABOVE,)
        return (Page.ABOVE, Page.BELOW)


def _extensions(inst, path, used, arcs, pages):
    last = path[-1]
    want = inst.colors[last].complement
    for nxt in range(inst.n_points):
        if nxt in used or inst.colors[nxt] is not want:
            continue
        lo, hi = min(last, nxt), max(last, nxt)
        for page in pages:
            if any(
                pg is page and (u < lo < v < hi or lo < u < hi < v)
                for u, v, pg in arcs
            ):
                continue
            yield nxt, (lo, hi, page)


def oracle_hampath_exists(inst: CollinearInstance,
                          pages: PageSet = PageSet.TWO,
                          budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Backtracking search for a non-crossing bichromatic Hamiltonian path
    with arcs restricted to the given page set."""
    if not inst.is_balanced:
        raise UnbalancedInstanceError("Hamiltonian path needs |R| = |B|")
    _check_points(inst, budget)
    counter = _StateCounter(budget.max_states)
    n = inst.n_points
    allowed = pages.pages

    def extend(path: list, used: set, arcs: list) -> bool:
        counter.tick()
        if len(path) == n:
            return True
        for nxt, arc in _extensions(inst, path, used, arcs, allowed):
            path.append(nxt)
            used.add(nxt)
            arcs.append(arc)
            if extend(path, used, arcs):
                return True
            path.pop()
            used.remove(nxt)
            arcs.pop()
        return False

    for start in range(n):
        if extend([start], {start}, []):
            return True
    return False


def oracle_hampath_enumerate(inst: CollinearInstance,
                             pages: PageSet = PageSet.TWO,
                             budget: OracleBudget = DEFAULT_BUDGET):
    """All distinct non-crossing Hamiltonian path edge sets (with pages).

    Only intended for tiny instances; paths traversed in both directions
    collapse to one edge set.
    """
    if not inst.is_balanced:
        raise UnbalancedInstanceError("Hamiltonian path needs |R| = |B|")
    _check_points(inst, budget)
    counter = _StateCounter(budget.max_states)
    n = inst.n_points
    allowed = pages.pages
    found: set = set()

    def extend(path: list, used: set, arcs: list) -> None:
        counter.tick()
        if len(path) == n:
            found.add(frozenset(ArcEdge(u, v, pg) for u, v, pg in arcs))
            return
        for nxt, arc in _extensions(inst, path, used, arcs, allowed):
            path.append(nxt)
            used.add(nxt)
            arcs.append(arc)
            extend(path, used, arcs)
            path.pop()
            used.remove(nxt)
            arcs.pop()

    for start in range(n):
        extend([start], {start}, [])
    return found
