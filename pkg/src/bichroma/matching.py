"""Minimum-weight non-crossing perfect matching on a balanced line.

A single left-to-right pass with a stack: push a point when the stack is
empty or its top has the same color, otherwise pop and emit the arc.  The
emitted arcs all lie above the spine, are nested or disjoint, and form
the unique non-crossing matching in which every arc's interior is
color-balanced; that matching has minimum total weight.  Runs in O(n).

The companion :func:`balanced_prefixes` returns the nesting forest of
color-balanced blocks carved out by the signed counter walk (+1 red,
-1 blue, block boundary at every return to zero); the greedy matching
joins the first and last point of every block in this forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List

from .core import (
    ArcEdge,
    CollinearInstance,
    Color,
    Page,
    SolveReport,
    StructureKind,
    UnbalancedInstanceError,
)


def matching_min(inst: CollinearInstance) -> SolveReport:
    """Greedy stack matching; optimal among one-page non-crossing
    perfect matchings."""
    if not inst.is_balanced:
        raise UnbalancedInstanceError("perfect matching needs |R| = |B|")
    colors = inst.colors
    stack: List[int] = []
    edges = []
    for i, c in enumerate(colors):
        if stack and colors[stack[-1]] is not c:
            top = stack.pop()
            assert colors[top] is c.complement
            edges.append(ArcEdge(top, i, Page.ABOVE))
        else:
            # the stack only ever holds one color
            assert not stack or colors[stack[-1]] is c
            stack.append(i)
    assert not stack, "balanced instance must empty the stack"
    return SolveReport.build(inst, edges, StructureKind.MATCHING)


@dataclass(frozen=True)
class BalancedBlock:
    """A color-balanced contiguous block [start..end] (inclusive) whose
    interior decomposes into the child blocks."""

    start: int
    end: int
    children: tuple

    def walk(self) -> Iterator["BalancedBlock"]:
        yield self
        for c in self.children:
            yield from c.walk()


def balanced_prefixes(inst: CollinearInstance) -> list:
    """Nesting forest of balanced blocks from the signed counter walk.

    At every level the walk starts at the segment's first point and cuts
    a block at each return to zero; the cut point always has the opposite
    color of the segment's first point.
    """
    if not inst.is_balanced:
        raise UnbalancedInstanceError("balanced decomposition needs |R| = |B|")
    colors = inst.colors

    def decompose(lo: int, hi: int) -> tuple:
        blocks = []
        start = lo
        bal = 0
        for i in range(lo, hi + 1):
            bal += 1 if colors[i] is Color.RED else -1
            if bal == 0:
                assert colors[i] is not colors[start]
                children = decompose(start + 1, i - 1) if i > start + 1 else ()
                blocks.append(BalancedBlock(start, i, children))
                start = i + 1
        assert bal == 0
        return tuple(blocks)

    return list(decompose(0, inst.n_points - 1))
