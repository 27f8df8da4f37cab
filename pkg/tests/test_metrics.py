import math
import random

import pytest

from comtext.detect import Partition
from comtext.errors import GraphError, UndefinedModularityError
from comtext.graph import WeightedGraph, structural_graph
from comtext.metrics import modularity, nmi, quality_report
from helpers import pairsum_modularity, random_partition, random_weighted_graph, scaled

from comtext.fixtures import KARATE_NODES, karate_edge_list, karate_partition


def whole_graph_partition(g):
    return Partition({u: 0 for u in g.nodes}, 1, 1)


def two_triangles_split():
    nodes = ["a1", "a2", "a3", "b1", "b2", "b3"]
    edges = [
        ("a1", "a2", 1.0), ("a2", "a3", 1.0), ("a1", "a3", 1.0),
        ("b1", "b2", 1.0), ("b2", "b3", 1.0), ("b1", "b3", 1.0),
    ]
    g = WeightedGraph(nodes, edges)
    p = Partition({n: (0 if n.startswith("a") else 1) for n in nodes}, 2, 2)
    return g, p


class TestModularity:
    def test_single_community_is_zero(self):
        g, _ = two_triangles_split()
        assert modularity(g, whole_graph_partition(g)) == pytest.approx(0.0, abs=1e-12)

    def test_two_triangles_half(self):
        g, p = two_triangles_split()
        assert modularity(g, p) == pytest.approx(0.5, abs=1e-12)

    def test_karate_factions_match_pairsum_oracle(self):
        g = structural_graph(karate_edge_list(), KARATE_NODES)
        p = karate_partition()
        oracle = pairsum_modularity(g, p)
        assert modularity(g, p) == pytest.approx(oracle, abs=1e-12)
        # value frozen from an independent run of the ordered-pair form
        assert oracle == pytest.approx(0.3582347140039433, abs=1e-12)

    def test_grouped_form_equals_pairsum_oracle(self):
        rng = random.Random(97)
        for _ in range(100):
            g = random_weighted_graph(rng)
            p = random_partition(rng, g.nodes)
            assert modularity(g, p) == pytest.approx(
                pairsum_modularity(g, p), abs=1e-12
            )

    def test_range(self):
        rng = random.Random(103)
        for _ in range(300):
            g = random_weighted_graph(rng)
            p = random_partition(rng, g.nodes)
            assert -0.5 - 1e-12 <= modularity(g, p) <= 1.0 + 1e-12

    def test_relabeling_invariance(self):
        g, p = two_triangles_split()
        swapped = Partition({n: 1 - c for n, c in p.assignment.items()}, 2, 2)
        assert modularity(g, p) == modularity(g, swapped)

    def test_weight_scaling_invariance(self):
        rng = random.Random(107)
        for _ in range(100):
            g = random_weighted_graph(rng)
            p = random_partition(rng, g.nodes)
            q = modularity(g, p)
            for factor in (0.5, 2.0, 7.5):
                assert modularity(scaled(g, factor), p) == pytest.approx(q, abs=1e-9)

    def test_zero_weight_error(self):
        g = WeightedGraph(["a", "b"], [("a", "b", 0.0)])
        with pytest.raises(UndefinedModularityError):
            modularity(g, whole_graph_partition(g))

    def test_node_mismatch_error(self):
        g, p = two_triangles_split()
        bad = Partition({"x": 0}, 1, 1)
        with pytest.raises(GraphError):
            modularity(g, bad)


class TestQualityReport:
    def test_stats(self):
        g, p = two_triangles_split()
        report = quality_report(g, p)
        assert report.total_weight == 6.0
        assert sum(c.size for c in report.per_community) == g.n
        for community in report.per_community:
            assert community.intra_weight == 3.0
            assert community.degree_sum == 6.0
            assert community.intra_weight <= report.total_weight
            assert community.degree_sum <= 2.0 * report.total_weight

    def test_json_round_trip(self, tmp_path):
        import json

        g, p = two_triangles_split()
        report = quality_report(g, p)
        path = tmp_path / "report.json"
        report.write_json(path)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["modularity"] == report.modularity
        assert len(data["communities"]) == 2


class TestNmi:
    def _partition(self, groups):
        assignment = {}
        for index, members in enumerate(groups):
            for node in members:
                assignment[node] = index
        return Partition(assignment, len(groups), max(1, len(groups)))

    def test_identity(self):
        p = self._partition([["a", "b"], ["c", "d"]])
        assert nmi(p, p) == pytest.approx(1.0, abs=1e-12)

    def test_label_permutation(self):
        p1 = self._partition([["a", "b"], ["c", "d"]])
        p2 = self._partition([["c", "d"], ["a", "b"]])
        assert nmi(p1, p2) == pytest.approx(1.0, abs=1e-12)

    def test_singletons_vs_single_block(self):
        p1 = self._partition([["a"], ["b"], ["c"]])
        p2 = self._partition([["a", "b", "c"]])
        assert nmi(p1, p2) == 0.0

    def test_both_single_block(self):
        p1 = self._partition([["a", "b"]])
        assert nmi(p1, p1) == 1.0

    def test_independent_partitions(self):
        p1 = self._partition([["a", "b"], ["c", "d"]])
        p2 = self._partition([["a", "c"], ["b", "d"]])
        assert nmi(p1, p2) == pytest.approx(0.0, abs=1e-12)

    def test_hand_computed_value(self):
        # {a,b | c,d} vs {a,b | c | d}: I = ln 2, H1 = ln 2,
        # H2 = (3/2) ln 2, so NMI = 2 ln2 / (ln2 + 1.5 ln2) = 0.8.
        p1 = self._partition([["a", "b"], ["c", "d"]])
        p2 = self._partition([["a", "b"], ["c"], ["d"]])
        expected = 2 * math.log(2) / (math.log(2) + 1.5 * math.log(2))
        assert nmi(p1, p2) == pytest.approx(expected, abs=1e-12)

    def test_symmetry(self):
        rng = random.Random(109)
        for _ in range(200):
            nodes = [f"n{i}" for i in range(rng.randint(2, 10))]
            p1 = random_partition(rng, nodes)
            p2 = random_partition(rng, nodes)
            assert nmi(p1, p2) == pytest.approx(nmi(p2, p1), abs=1e-12)
            assert 0.0 <= nmi(p1, p2) <= 1.0

    def test_node_set_mismatch(self):
        p1 = self._partition([["a", "b"]])
        p2 = self._partition([["a", "c"]])
        with pytest.raises(GraphError):
            nmi(p1, p2)
