"""Partition quality scores: weighted modularity and NMI.

Modularity is computed in the grouped form
``Q = sum_n [L_n / L - (D_n / 2L)^2]`` with L the total edge weight, L_n a
community's internal edge weight and D_n the sum of its members' strengths.
This is the weighted generalization of the count-based formula (counts are
the all-weights-one special case) and equals the pair-sum form over all
ordered node pairs, which the tests use as an independent oracle.  Q lies
in [-0.5, 1] for any partition.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass

from .detect import Partition
from .errors import GraphError, UndefinedModularityError
from .graph import WeightedGraph


@dataclass(frozen=True)
class CommunityStats:
    index: int
    size: int
    intra_weight: float
    degree_sum: float


@dataclass(frozen=True)
class QualityReport:
    modularity: float
    total_weight: float
    per_community: tuple[CommunityStats, ...]

    def to_dict(self) -> dict:
        return {
            "modularity": self.modularity,
            "total_weight": self.total_weight,
            "communities": [
                {
                    "index": c.index,
                    "size": c.size,
                    "intra_weight": c.intra_weight,
                    "degree_sum": c.degree_sum,
                }
                for c in self.per_community
            ],
        }

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def quality_report(g: WeightedGraph, p: Partition) -> QualityReport:
    """Per-community intra weight / strength sums plus the modularity score."""
    if set(p.assignment) != set(g.nodes):
        raise GraphError("partition does not cover exactly the graph's nodes")
    total = g.total_weight
    if total <= 0.0:
        raise UndefinedModularityError("modularity is undefined for zero total weight")
    intra = [0.0] * p.m
    degree_sum = [0.0] * p.m
    size = [0] * p.m
    for node in g.nodes:
        community = p.assignment[node]
        size[community] += 1
        degree_sum[community] += g.strength(node)
    for u, v, w in g.edges():
        if p.assignment[u] == p.assignment[v]:
            intra[p.assignment[u]] += w
    q = math.fsum(
        intra[c] / total - (degree_sum[c] / (2.0 * total)) ** 2 for c in range(p.m)
    )
    stats = tuple(
        CommunityStats(c, size[c], intra[c], degree_sum[c]) for c in range(p.m)
    )
    return QualityReport(q, total, stats)


def modularity(g: WeightedGraph, p: Partition) -> float:
    return quality_report(g, p).modularity


def nmi(p1: Partition, p2: Partition) -> float:
    """Normalized mutual information (arithmetic-mean normalization).

    1 for partitions identical up to label permutation (including the
    degenerate both-single-block case); 0 when one partition carries no
    information about the other.
    """
    if set(p1.assignment) != set(p2.assignment):
        raise GraphError("partitions cover different node sets")
    n = len(p1.assignment)
    joint = Counter((p1.assignment[u], p2.assignment[u]) for u in sorted(p1.assignment))
    rows = Counter(p1.assignment.values())
    cols = Counter(p2.assignment.values())

    def entropy(counts: Counter) -> float:
        return -math.fsum((c / n) * math.log(c / n) for _, c in sorted(counts.items()))

    h1, h2 = entropy(rows), entropy(cols)
    if h1 + h2 == 0.0:
        return 1.0
    info = math.fsum(
        (c / n) * (math.log(c / n) - math.log(rows[a] / n) - math.log(cols[b] / n))
        for (a, b), c in sorted(joint.items())
    )
    return min(1.0, max(0.0, 2.0 * info / (h1 + h2)))
