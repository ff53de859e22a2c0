"""Minimum spanning trees for collinear bichromatic points.

Two solvers.  ``mst_crossing`` allows arc crossings and runs in linear
time: connect every point to its nearest opposite-color point, then join
the resulting components left to right with a cheapest bichromatic
bridge; every edge added is a minimum-weight bichromatic edge across
some cut, so the tree is optimal.  It does not need |R| = |B|.

``mst_noncrossing`` restricts all arcs to one page with no crossings and
runs in quadratic time.  Every edge of a minimum non-crossing tree joins
consecutive monochromatic chunks, and arcs between the same chunk pair
are nested, so the outermost arcs chain into an umbrella path from the
first point to the last.  A dynamic program chooses the umbrella; the
region under each umbrella arc is filled greedily by repeatedly taking
the shorter of the two one-step-inward arcs (``inner_fill``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import (
    ArcEdge,
    CollinearInstance,
    Page,
    SingleColorError,
    SolveReport,
    StructureKind,
    Weight,
)


@dataclass(frozen=True)
class Chunk:
    """Maximal monochromatic run of consecutive points, inclusive range."""

    lo: int
    hi: int

    def __len__(self) -> int:
        return self.hi - self.lo + 1


def chunk_decomposition(inst: CollinearInstance) -> List[Chunk]:
    chunks = []
    lo = 0
    for i in range(1, inst.n_points):
        if inst.colors[i] is not inst.colors[i - 1]:
            chunks.append(Chunk(lo, i - 1))
            lo = i
    chunks.append(Chunk(lo, inst.n_points - 1))
    return chunks


# ---------------------------------------------------------------------------
# Crossing-allowed MST (linear)


def _mst_crossing_parts(inst: CollinearInstance):
    """Step-1 edges plus, per step-2 bridge, the prefix/suffix cut it spans.

    Returned as ``(step1, [(edge, prefix_end), ...])`` where ``prefix_end``
    is the last point index of the left side of the cut.
    """
    if inst.is_single_color:
        raise SingleColorError("spanning tree needs both colors")
    n = inst.n_points
    xs, colors = inst.xs, inst.colors

    # step 1: nearest opposite-color arcs, deduplicated
    left_opp: List[Optional[int]] = [None] * n
    prev = {c: None for c in set(colors)}
    for i in range(n):
        left_opp[i] = prev[colors[i].complement]
        prev[colors[i]] = i
    right_opp: List[Optional[int]] = [None] * n
    nxt = {c: None for c in set(colors)}
    for i in range(n - 1, -1, -1):
        right_opp[i] = nxt[colors[i].complement]
        nxt[colors[i]] = i

    step1 = set()
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for i in range(n):
        lo, hi = left_opp[i], right_opp[i]
        if lo is None:
            j = hi
        elif hi is None:
            j = lo
        elif xs[i] - xs[lo] <= xs[hi] - xs[i]:
            j = lo  # tie goes to the left point
        else:
            j = hi
        step1.add((min(i, j), max(i, j)))
        union(i, j)

    # components are contiguous intervals; record them left to right
    comps: List[Tuple[int, int]] = []
    start = 0
    for i in range(1, n):
        if find(i) != find(i - 1):
            comps.append((start, i - 1))
            start = i
    comps.append((start, n - 1))
    roots = {find(i) for i in range(n)}
    assert len(roots) == len(comps), "components must be contiguous intervals"

    # per component, leftmost/rightmost point of each color
    step2 = []
    for (alo, ahi), (blo, bhi) in zip(comps, comps[1:]):
        r_i, l_next = ahi, blo
        if colors[r_i] is not colors[l_next]:
            edge = (r_i, l_next)
        else:
            # nearest opposite of r(C_i) inside C_{i+1} is its leftmost
            # opposite-color point, and symmetrically for l(C_{i+1})
            b1 = next(j for j in range(blo, bhi + 1)
                      if colors[j] is colors[r_i].complement)
            a1 = next(j for j in range(ahi, alo - 1, -1)
                      if colors[j] is colors[l_next].complement)
            w1 = xs[b1] - xs[r_i]
            w2 = xs[l_next] - xs[a1]
            edge = (r_i, b1) if w1 <= w2 else (a1, l_next)
        step2.append((edge, ahi))
    return step1, step2


def mst_crossing(inst: CollinearInstance) -> SolveReport:
    """Minimum-weight bichromatic spanning tree, crossings allowed."""
    step1, step2 = _mst_crossing_parts(inst)
    edges = {ArcEdge(u, v, Page.ABOVE) for u, v in step1}
    edges |= {ArcEdge(u, v, Page.ABOVE) for (u, v), _ in step2}
    return SolveReport.build(inst, edges, StructureKind.SPANNING_TREE)


# ---------------------------------------------------------------------------
# Inner fill under a fixed outer arc


def _fill_cost_table(xs: Sequence[Weight], a: Sequence[int], b: Sequence[int],
                     prefer_heavier: bool) -> list:
    """fill[i][j] = cheapest fill under the arc (a[i], b[j]) whose interior
    is a[i+1:] followed by b[:j].

    Any non-crossing tree containing the outer arc contains one of the two
    one-step-inward arcs, and everything else nests under it, so
    fill(i, j) = min over the two shrunken sub-problems.  Choosing the arc
    greedily by weight is NOT optimal (the cheaper arc can force costlier
    attachments later), hence the full min.  ``prefer_heavier`` switches
    to a deliberately broken weight-greedy choice of the heavier arc; it
    exists only as a fault-injection hook for verification harnesses.
    """
    la, lb = len(a), len(b)
    pref_b = [0]
    for j in b:
        pref_b.append(pref_b[-1] + xs[j])
    suf_a = [0] * (la + 1)
    for i in range(la - 1, -1, -1):
        suf_a[i] = suf_a[i + 1] + xs[a[i]]
    fill = [[0] * lb for _ in range(la)]
    for i in range(la - 1, -1, -1):
        row = fill[i]
        for j in range(lb):
            rest_a = la - 1 - i
            if rest_a == 0 and j == 0:
                continue
            if rest_a == 0:
                # only right-color interior: hang it all from a[i]
                row[j] = pref_b[j] - j * xs[a[i]]
            elif j == 0:
                # only left-color interior: hang it all from b[j]
                row[j] = rest_a * xs[b[j]] - suf_a[i + 1]
            else:
                cand_left = (xs[b[j - 1]] - xs[a[i]]) + row[j - 1]
                cand_right = (xs[b[j]] - xs[a[i + 1]]) + fill[i + 1][j]
                if prefer_heavier:
                    heavier_left = (xs[b[j - 1]] - xs[a[i]]) >= \
                        (xs[b[j]] - xs[a[i + 1]])
                    row[j] = cand_left if heavier_left else cand_right
                else:
                    row[j] = min(cand_left, cand_right)
    return fill


def inner_fill(inst: CollinearInstance, outer: ArcEdge,
               prefer_heavier: bool = False):
    """Cheapest way to hang the points under ``outer`` from its endpoints.

    The interior must be a (possibly empty) run of the left endpoint's
    color followed by a (possibly empty) run of the right endpoint's
    color, i.e. it spans at most the two chunks the outer arc bridges.
    Exact nested dynamic program over the two one-step-inward arcs; cost
    ties between the two branches resolve toward the arc at the left
    endpoint.  Returns ``(edges, cost)`` excluding the outer arc itself.
    """
    xs, colors = inst.xs, inst.colors
    lo, hi = outer.u, outer.v
    if not 0 <= lo < hi < inst.n_points:
        raise IndexError("outer arc out of range")
    if colors[lo] is colors[hi]:
        raise ValueError("outer arc must be bichromatic")
    split = lo + 1
    while split < hi and colors[split] is colors[lo]:
        split += 1
    if any(colors[i] is not colors[hi] for i in range(split, hi)):
        raise ValueError("interior spans more than two chunks")

    a = [lo] + list(range(lo + 1, split))   # left color, outer endpoint first
    b = list(range(split, hi)) + [hi]       # right color, outer endpoint last
    fill = _fill_cost_table(xs, a, b, prefer_heavier)

    edges: List[ArcEdge] = []
    i, j = 0, len(b) - 1
    while True:
        rest_a = len(a) - 1 - i
        if rest_a == 0 and j == 0:
            break
        if rest_a == 0:
            edges.extend(ArcEdge(a[i], b[z], Page.ABOVE) for z in range(j))
            break
        if j == 0:
            edges.extend(
                ArcEdge(a[z], b[0], Page.ABOVE) for z in range(i + 1, len(a))
            )
            break
        w_left = xs[b[j - 1]] - xs[a[i]]
        w_right = xs[b[j]] - xs[a[i + 1]]
        cand_left = w_left + fill[i][j - 1]
        cand_right = w_right + fill[i + 1][j]
        if prefer_heavier:
            take_left = w_left >= w_right
        else:
            take_left = cand_left <= cand_right
        if take_left:
            edges.append(ArcEdge(a[i], b[j - 1], Page.ABOVE))
            j -= 1
        else:
            edges.append(ArcEdge(a[i + 1], b[j], Page.ABOVE))
            i += 1
    return edges, fill[0][len(b) - 1]


def mst_noncrossing(inst: CollinearInstance,
                    prefer_heavier_fill: bool = False) -> SolveReport:
    """Minimum-weight non-crossing spanning tree, all arcs on one page.

    Dynamic program over umbrella arcs: state (r, s) is the cheapest tree
    of all points up to s whose last umbrella arc is (r, s) with r and s
    in consecutive chunks; the answer is the best state ending at the
    last point.  O(n^2) overall.
    """
    if inst.is_single_color:
        raise SingleColorError("spanning tree needs both colors")
    xs = inst.xs
    chunks = chunk_decomposition(inst)
    m = len(chunks)
    members = [list(range(c.lo, c.hi + 1)) for c in chunks]

    INF = float("inf")
    # cost[t][i][j]: best tree of points 0..members[t+1][j] whose last
    # umbrella arc is (members[t][i], members[t+1][j])
    cost: List[list] = []
    back: List[list] = []
    for t in range(m - 1):
        a, b = members[t], members[t + 1]
        fill = _fill_cost_table(xs, a, b, prefer_heavier_fill)
        if t == 0:
            layer = [[INF] * len(b) for _ in a]
            for j in range(len(b)):
                layer[0][j] = (xs[b[j]] - xs[a[0]]) + fill[0][j]
            cost.append(layer)
            back.append([[None] * len(b) for _ in a])
            continue
        # best predecessor cost per point s of chunk t
        prev = cost[t - 1]
        best_pred = [INF] * len(a)
        best_arg = [None] * len(a)
        for r in range(len(cost[t - 1])):
            row = prev[r]
            for i in range(len(a)):
                if row[i] < best_pred[i]:
                    best_pred[i] = row[i]
                    best_arg[i] = r
        layer = [[INF] * len(b) for _ in a]
        backs = [[None] * len(b) for _ in a]
        for i in range(len(a)):
            if best_pred[i] == INF:
                continue
            base = best_pred[i] + (-xs[a[i]])
            row_fill = fill[i]
            row = layer[i]
            brow = backs[i]
            for j in range(len(b)):
                row[j] = base + xs[b[j]] + row_fill[j]
                brow[j] = best_arg[i]
        cost.append(layer)
        back.append(backs)

    # answer: cheapest state whose umbrella arc ends at the last point
    last_layer = cost[m - 2]
    j_last = len(members[m - 1]) - 1
    best_i = min(range(len(members[m - 2])),
                 key=lambda i: last_layer[i][j_last])
    if last_layer[best_i][j_last] == INF:
        raise AssertionError("umbrella dynamic program found no tree")

    # walk back through the umbrella and refill under each arc
    edges: List[ArcEdge] = []
    t, i, j = m - 2, best_i, j_last
    while t >= 0:
        u = members[t][i]
        v = members[t + 1][j]
        arc = ArcEdge(u, v, Page.ABOVE)
        edges.append(arc)
        fill_edges, _ = inner_fill(inst, arc, prefer_heavier_fill)
        edges.extend(fill_edges)
        r = back[t][i][j]
        t, i, j = t - 1, r, i
    return SolveReport.build(inst, edges, StructureKind.SPANNING_TREE)
