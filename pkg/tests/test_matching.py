import itertools
import random

import pytest

from bichroma.core import (
    ArcEdge,
    CollinearInstance,
    Color,
    Page,
    StructureKind,
    UnbalancedInstanceError,
    validate,
    weights_close,
)
from bichroma.matching import balanced_prefixes, matching_min
from bichroma.oracle import oracle_matching, oracle_matching_exhaustive

R, B = Color.RED, Color.BLUE


def inst_of(seq, xs=None):
    return CollinearInstance.from_colors([Color(c) for c in seq], xs)


def balanced_sequences(n_points):
    for reds in itertools.combinations(range(n_points), n_points // 2):
        seq = ["B"] * n_points
        for r in reds:
            seq[r] = "R"
        yield "".join(seq)


def edge_pairs(report):
    return {e.pair for e in report.graph.edges}


class TestGreedyMatching:
    def test_alternating(self):
        rep = matching_min(inst_of("RBRB"))
        assert edge_pairs(rep) == {(0, 1), (2, 3)}
        assert rep.total_weight == 2

    def test_nested(self):
        rep = matching_min(inst_of("RRBB"))
        assert edge_pairs(rep) == {(1, 2), (0, 3)}
        assert rep.total_weight == 4

    def test_blue_first_blocks(self):
        rep = matching_min(inst_of("RBBR"))
        assert edge_pairs(rep) == {(0, 1), (2, 3)}
        assert rep.total_weight == 2

    def test_unbalanced_rejected(self):
        with pytest.raises(UnbalancedInstanceError):
            matching_min(inst_of("RRB"))

    def test_all_arcs_above(self):
        rep = matching_min(inst_of("RRBBBR"))
        assert all(e.page is Page.ABOVE for e in rep.graph.edges)

    def test_valid_noncrossing_exhaustive_14(self):
        for n in (2, 4, 6, 8, 10, 12, 14):
            for seq in balanced_sequences(n):
                rep = matching_min(inst_of(seq))
                res = validate(rep.graph.instance, rep.graph,
                               StructureKind.MATCHING)
                assert res.ok and res.noncrossing, seq

    def test_optimal_exhaustive_unit_spacing(self):
        for n in (2, 4, 6, 8, 10):
            for seq in balanced_sequences(n):
                rep = matching_min(inst_of(seq))
                w, _ = oracle_matching(rep.graph.instance)
                assert rep.total_weight == w, seq

    def test_optimal_random_coordinates(self):
        # the greedy edge set depends only on colors; its optimality must
        # survive arbitrary coordinate draws
        rng = random.Random(42)
        for _ in range(10_000):
            n = rng.choice((4, 6, 8, 10, 12))
            seq = rng.sample(["R"] * (n // 2) + ["B"] * (n // 2), n)
            xs, x = [], 0.0
            for _ in range(n):
                x += 1.0 - rng.random()
                xs.append(x)
            inst = inst_of(seq, xs)
            rep = matching_min(inst)
            w, _ = oracle_matching(inst)
            assert weights_close(rep.total_weight, w)

    def test_matches_exhaustive_oracle(self):
        for n in (2, 4, 6, 8):
            for seq in balanced_sequences(n):
                inst = inst_of(seq)
                assert matching_min(inst).total_weight == \
                    oracle_matching_exhaustive(inst)


class TestBalancedPrefixes:
    def test_nested_blocks(self):
        roots = balanced_prefixes(inst_of("RRBB"))
        assert [(b.start, b.end) for b in roots] == [(0, 3)]
        assert [(b.start, b.end) for b in roots[0].children] == [(1, 2)]

    def test_sibling_blocks(self):
        roots = balanced_prefixes(inst_of("RBRB"))
        assert [(b.start, b.end) for b in roots] == [(0, 1), (2, 3)]

    def test_negative_excursion(self):
        # counter walk 1,0,-1,0: a return to zero closes a block whatever
        # the excursion sign
        roots = balanced_prefixes(inst_of("RBBR"))
        assert [(b.start, b.end) for b in roots] == [(0, 1), (2, 3)]

    def test_block_endpoints_have_opposite_colors(self):
        for n in (4, 6, 8, 10):
            for seq in balanced_sequences(n):
                inst = inst_of(seq)
                for root in balanced_prefixes(inst):
                    for blk in root.walk():
                        assert inst.color(blk.start) is not inst.color(blk.end)

    def test_matching_contains_every_block_edge(self):
        # the greedy matching pairs each block's first and last point
        for n in (2, 4, 6, 8, 10, 12):
            for seq in balanced_sequences(n):
                inst = inst_of(seq)
                pairs = edge_pairs(matching_min(inst))
                blocks = {
                    (b.start, b.end)
                    for root in balanced_prefixes(inst)
                    for b in root.walk()
                }
                assert blocks == pairs, seq


class TestUniqueness:
    def test_every_noncrossing_matching_has_balanced_interiors(self):
        # interior points of any arc must match among themselves, so a
        # balanced interior cannot distinguish matchings
        for n in (2, 4, 6, 8):
            for seq in balanced_sequences(n):
                inst = inst_of(seq)
                for m in _noncrossing_matchings(inst):
                    for u, v in m:
                        bal = sum(1 if inst.color(i) is R else -1
                                  for i in range(u + 1, v))
                        assert bal == 0

    def test_greedy_is_unique_first_balance_matching(self):
        # among all one-page non-crossing perfect matchings, exactly one
        # closes every arc at the earliest point balancing its left end
        for n in (2, 4, 6, 8, 10):
            for seq in balanced_sequences(n):
                inst = inst_of(seq)
                greedy = frozenset(edge_pairs(matching_min(inst)))
                first_balance = set()
                for m in _noncrossing_matchings(inst):
                    if all(_is_first_balance(inst, u, v) for u, v in m):
                        first_balance.add(m)
                assert first_balance == {greedy}, seq


def _is_first_balance(inst, u, v):
    bal = 0
    for i in range(u, v + 1):
        bal += 1 if inst.color(i) is R else -1
        if bal == 0:
            return i == v
    return False


def _noncrossing_matchings(inst):
    reds = inst.indices_of(R)
    blues = inst.indices_of(B)
    for perm in itertools.permutations(blues):
        pairs = frozenset(
            (min(r, b), max(r, b)) for r, b in zip(reds, perm)
        )
        if any(
            a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]
            for a, b in itertools.combinations(pairs, 2)
        ):
            continue
        yield pairs
