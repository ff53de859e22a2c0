import itertools

import pytest

from bichroma.core import (
    ArcEdge,
    ArcGraph,
    CircleInstance,
    CollinearInstance,
    Color,
    Page,
    SolveReport,
    StructureKind,
    arcs_cross,
    collinear_has_crossing,
    count_chord_crossings,
    edge_weight_circle,
    edge_weight_collinear,
    validate,
)

R, B = Color.RED, Color.BLUE
A, BE = Page.ABOVE, Page.BELOW


def inst_of(seq, xs=None):
    colors = [Color(ch) for ch in seq]
    return CollinearInstance.from_colors(colors, xs)


class TestInstances:
    def test_strictly_increasing_required(self):
        with pytest.raises(ValueError):
            CollinearInstance((0, 0), (R, B))
        with pytest.raises(ValueError):
            CollinearInstance((1, 0), (R, B))

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            CollinearInstance((0,), (R,))

    def test_counts(self):
        inst = inst_of("RRBB")
        assert inst.n_red == 2 and inst.n_blue == 2 and inst.is_balanced
        assert not inst_of("RRB").is_balanced
        assert inst_of("RR").is_single_color

    def test_integer_coords_flag(self):
        assert inst_of("RB").integer_coords
        assert not inst_of("RB", xs=(0.0, 1.5)).integer_coords

    def test_circle_chunk_colors(self):
        inst = CircleInstance(4, 2, R)
        assert [inst.color(i).value for i in range(8)] == list("RRBBRRBB")
        assert inst.num_chunks == 4

    def test_circle_requires_divisibility(self):
        with pytest.raises(ValueError):
            CircleInstance(4, 3)


class TestWeights:
    def test_collinear_distance(self):
        inst = inst_of("RB", xs=(0, 3))
        assert edge_weight_collinear(inst, ArcEdge(0, 1)) == 3

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            ArcEdge(1, 1)

    def test_collinear_span(self):
        inst = inst_of("RBRB")
        assert edge_weight_collinear(inst, ArcEdge(0, 3)) == 3

    def test_out_of_range(self):
        inst = inst_of("RB")
        with pytest.raises(IndexError):
            edge_weight_collinear(inst, ArcEdge(0, 5))

    def test_circle_adjacent(self):
        inst = CircleInstance(2, 2)
        assert edge_weight_circle(inst, ArcEdge(0, 1)) == 2

    def test_circle_diametral_counts_both_endpoints(self):
        inst = CircleInstance(2, 2)
        assert edge_weight_circle(inst, ArcEdge(0, 2)) == 3

    def test_circle_shorter_arc(self):
        inst = CircleInstance(4, 4)
        assert edge_weight_circle(inst, ArcEdge(0, 5)) == 4

    def test_circle_weight_range(self):
        # weight of any chord on a 2n-point circle lies in [2, n+1]
        for n, k in [(2, 2), (3, 3), (4, 2), (5, 5), (6, 2), (6, 3)]:
            inst = CircleInstance(n, k)
            weights = {
                edge_weight_circle(inst, ArcEdge(u, v))
                for u, v in itertools.combinations(range(2 * n), 2)
            }
            assert min(weights) == 2
            assert max(weights) == n + 1


class TestCrossing:
    def test_proper_interleaving(self):
        assert arcs_cross(ArcEdge(0, 2, A), ArcEdge(1, 3, A))

    def test_nesting(self):
        assert not arcs_cross(ArcEdge(0, 3, A), ArcEdge(1, 2, A))

    def test_different_pages(self):
        assert not arcs_cross(ArcEdge(0, 2, A), ArcEdge(1, 3, BE))

    def test_shared_endpoint(self):
        assert not arcs_cross(ArcEdge(0, 2, A), ArcEdge(2, 3, A))

    def test_symmetry_exhaustive(self):
        # all edge pairs over 12 positions, both pages
        edges = [
            ArcEdge(u, v, p)
            for u, v in itertools.combinations(range(12), 2)
            for p in (A, BE)
        ]
        for a, b in itertools.combinations(edges, 2):
            assert arcs_cross(a, b) == arcs_cross(b, a)

    def test_sweep_matches_pairwise(self):
        import random

        rng = random.Random(7)
        for _ in range(400):
            m = rng.randrange(0, 8)
            edges = []
            pairs = set()
            while len(edges) < m:
                u, v = rng.sample(range(10), 2)
                u, v = min(u, v), max(u, v)
                page = rng.choice((A, BE))
                if (u, v) in pairs:
                    continue
                pairs.add((u, v))
                edges.append(ArcEdge(u, v, page))
            brute = any(
                arcs_cross(a, b) for a, b in itertools.combinations(edges, 2)
            )
            assert collinear_has_crossing(edges) == brute

    def test_chord_count_matches_pairwise(self):
        import random

        rng = random.Random(11)
        for _ in range(300):
            total = rng.randrange(4, 14)
            m = rng.randrange(0, min(9, total * (total - 1) // 2 + 1))
            pairs = set()
            while len(pairs) < m:
                u, v = rng.sample(range(total), 2)
                pairs.add((min(u, v), max(u, v)))
            edges = [ArcEdge(u, v) for u, v in pairs]
            brute = sum(
                1
                for a, b in itertools.combinations(edges, 2)
                if a.u < b.u < a.v < b.v or b.u < a.u < b.v < a.v
            )
            assert count_chord_crossings(edges, total) == brute


class TestArcGraph:
    def test_rejects_monochromatic(self):
        inst = inst_of("RRBB")
        with pytest.raises(ValueError):
            ArcGraph(inst, frozenset({ArcEdge(0, 1, A)}))

    def test_rejects_duplicate_pair_across_pages(self):
        inst = inst_of("RB")
        with pytest.raises(ValueError):
            ArcGraph(inst, frozenset({ArcEdge(0, 1, A), ArcEdge(0, 1, BE)}))

    def test_weight_sum(self):
        inst = inst_of("RBRB")
        g = ArcGraph(inst, frozenset({ArcEdge(0, 1, A), ArcEdge(2, 3, A)}))
        assert g.total_weight() == 2


class TestValidate:
    def test_hampath_ok(self):
        inst = inst_of("RBRB")
        g = ArcGraph(
            inst,
            frozenset({ArcEdge(0, 1, A), ArcEdge(1, 2, A), ArcEdge(2, 3, A)}),
        )
        res = validate(inst, g, StructureKind.HAMPATH)
        assert res.ok and res.noncrossing

    def test_matching_ok(self):
        inst = inst_of("RBRB")
        g = ArcGraph(inst, frozenset({ArcEdge(0, 1, A), ArcEdge(2, 3, A)}))
        res = validate(inst, g, StructureKind.MATCHING)
        assert res.ok and res.noncrossing

    def test_matching_with_crossing(self):
        inst = inst_of("RRBB")
        g = ArcGraph(inst, frozenset({ArcEdge(0, 2, A), ArcEdge(1, 3, A)}))
        res = validate(inst, g, StructureKind.MATCHING)
        assert res.ok and not res.noncrossing

    def test_rejects_foreign_instance(self):
        a, b = inst_of("RB"), inst_of("BR")
        g = ArcGraph(a, frozenset({ArcEdge(0, 1, A)}))
        with pytest.raises(ValueError):
            validate(b, g, StructureKind.MATCHING)

    def test_hampath_detects_cycle(self):
        inst = inst_of("RBRB")
        g = ArcGraph(
            inst,
            frozenset(
                {ArcEdge(0, 1, A), ArcEdge(1, 2, A), ArcEdge(2, 3, A),
                 ArcEdge(0, 3, BE)}
            ),
        )
        assert not validate(inst, g, StructureKind.HAMPATH).ok
        assert validate(inst, g, StructureKind.TOUR).ok

    def test_report_build_recomputes(self):
        inst = inst_of("RBRB")
        rep = SolveReport.build(
            inst, [ArcEdge(0, 1, A), ArcEdge(2, 3, A)], StructureKind.MATCHING
        )
        assert rep.total_weight == 2 and rep.noncrossing
        g = rep.graph
        with pytest.raises(ValueError):
            SolveReport(g, 99, StructureKind.MATCHING, True)
