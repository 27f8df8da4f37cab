"""Bundled datasets and a seeded planted-partition corpus generator.

The karate club network ships inline: the canonical 34-node edge list (78
undirected edges) with the historical two-faction membership.  The club is
often cited with 156 edges, which is the doubled directed count of the same
78 unordered pairs.

The synthetic generator stands in for platform data that cannot be
redistributed.  It plants ``groups`` communities: users in one group share
a private vocabulary and a common sentiment polarity, intra-group edges
appear with probability ``p_in`` and inter-group edges with ``p_out``.  All
randomness comes from one ``random.Random(rng_seed)`` (the stdlib Mersenne
Twister, stable across Python releases), consumed in a fixed order: token
draws user by user in sorted order, then edge draws pair by pair in sorted
order.  Identical specs therefore produce byte-identical files.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import EdgeList
from .detect import Partition, save_partition
from .errors import ParameterError

_KARATE_EDGE_DATA = """
01-02 01-03 01-04 01-05 01-06 01-07 01-08 01-09 01-11 01-12 01-13 01-14
01-18 01-20 01-22 01-32 02-03 02-04 02-08 02-14 02-18 02-20 02-22 02-31
03-04 03-08 03-09 03-10 03-14 03-28 03-29 03-33 04-08 04-13 04-14 05-07
05-11 06-07 06-11 06-17 07-17 09-31 09-33 09-34 10-34 14-34 15-33 15-34
16-33 16-34 19-33 19-34 20-34 21-33 21-34 23-33 23-34 24-26 24-28 24-30
24-33 24-34 25-26 25-28 25-32 26-32 27-30 27-34 28-34 29-32 29-34 30-33
30-34 31-33 31-34 32-33 32-34 33-34
"""

KARATE_EDGES: tuple[tuple[str, str], ...] = tuple(
    tuple(pair.split("-")) for pair in _KARATE_EDGE_DATA.split()
)

# Faction that stayed with the instructor after the split; everyone else
# sided with the club administrator.
KARATE_INSTRUCTOR_FACTION = frozenset(
    "01 02 03 04 05 06 07 08 09 11 12 13 14 17 18 20 22".split()
)

KARATE_NODES: tuple[str, ...] = tuple(f"{i:02d}" for i in range(1, 35))


def karate_edge_list() -> EdgeList:
    return EdgeList.from_pairs(KARATE_EDGES)


def karate_partition() -> Partition:
    """The historical two-faction membership (instructor side = community 0)."""
    assignment = {
        u: (0 if u in KARATE_INSTRUCTOR_FACTION else 1) for u in KARATE_NODES
    }
    return Partition(assignment, 2, 2)


def write_karate(out_dir) -> tuple[Path, Partition]:
    """Write the edge CSV and faction partition; returns (edge path, factions)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    edge_path = out / "karate_edges.csv"
    with open(edge_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(f"{u},{v}" for u, v in KARATE_EDGES) + "\n")
    factions = karate_partition()
    save_partition(factions, out / "karate_factions.txt")
    return edge_path, factions


# Polarity palette for default group sentiments: alternating signs so that
# adjacent groups repel, magnitudes kept away from 0 so every group has a
# definite tendency.
_POLARITY_PALETTE = (0.8, -0.8, 0.4, -0.4, 0.6, -0.6, 0.2, -0.2)


@dataclass(frozen=True)
class SyntheticSpec:
    """Recipe for one planted fixture; identical specs generate identical bytes."""

    groups: int
    nodes_per_group: int
    p_in: float
    p_out: float
    vocab_per_group: tuple[tuple[str, ...], ...]
    sentiment_per_group: tuple[float, ...]
    rng_seed: int
    tokens_per_user: int = 30

    def __post_init__(self):
        if self.groups < 2 or self.nodes_per_group < 1:
            raise ParameterError("need at least 2 groups with at least 1 node each")
        if len(self.vocab_per_group) != self.groups:
            raise ParameterError("vocab_per_group must have one entry per group")
        if len(self.sentiment_per_group) != self.groups:
            raise ParameterError("sentiment_per_group must have one entry per group")
        if not all(0.0 <= p <= 1.0 for p in (self.p_in, self.p_out)):
            raise ParameterError("edge probabilities must be in [0, 1]")
        if any(not vocab for vocab in self.vocab_per_group):
            raise ParameterError("group vocabularies must be non-empty")
        seen: set[str] = set()
        for vocab in self.vocab_per_group:
            if seen.intersection(vocab):
                raise ParameterError("group vocabularies must be pairwise disjoint")
            seen.update(vocab)
        if any(not -1.0 <= s <= 1.0 for s in self.sentiment_per_group):
            raise ParameterError("group sentiments must be in [-1, 1]")
        if self.tokens_per_user < 1:
            raise ParameterError("tokens_per_user must be positive")


def default_spec(
    groups: int = 2,
    nodes_per_group: int = 10,
    p_in: float = 0.8,
    p_out: float = 0.02,
    rng_seed: int = 42,
    tokens_per_user: int = 30,
) -> SyntheticSpec:
    """Spec with auto-built disjoint vocabularies and palette sentiments."""
    vocab = tuple(
        tuple(f"topic{g}term{t}" for t in range(8)) for g in range(groups)
    )
    sentiments = tuple(
        _POLARITY_PALETTE[g % len(_POLARITY_PALETTE)] for g in range(groups)
    )
    return SyntheticSpec(
        groups=groups,
        nodes_per_group=nodes_per_group,
        p_in=p_in,
        p_out=p_out,
        vocab_per_group=vocab,
        sentiment_per_group=sentiments,
        rng_seed=rng_seed,
        tokens_per_user=tokens_per_user,
    )


@dataclass(frozen=True)
class GeneratedFixture:
    corpus_path: Path
    edges_path: Path
    lexicon_path: Path
    truth_path: Path
    truth: Partition


def _user_ids(spec: SyntheticSpec) -> list[tuple[str, int]]:
    return [
        (f"g{g:02d}u{i:03d}", g)
        for g in range(spec.groups)
        for i in range(spec.nodes_per_group)
    ]


def generate(spec: SyntheticSpec, out_dir) -> GeneratedFixture:
    """Write corpus/edge/lexicon files plus the ground-truth partition."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(spec.rng_seed)
    users = _user_ids(spec)

    corpus_path = out / "corpus.jsonl"
    with open(corpus_path, "w", encoding="utf-8", newline="\n") as fh:
        for user, group in users:
            tokens = [
                rng.choice(spec.vocab_per_group[group])
                for _ in range(spec.tokens_per_user)
            ]
            fh.write(json.dumps({"user_id": user, "text": " ".join(tokens)}) + "\n")

    lexicon_path = out / "lexicon.tsv"
    term_scores = {
        term: spec.sentiment_per_group[g]
        for g in range(spec.groups)
        for term in spec.vocab_per_group[g]
    }
    with open(lexicon_path, "w", encoding="utf-8", newline="\n") as fh:
        for term in sorted(term_scores):
            fh.write(f"{term}\t{term_scores[term]:.4f}\n")

    edges_path = out / "edges.csv"
    with open(edges_path, "w", encoding="utf-8", newline="\n") as fh:
        for i, (user_a, group_a) in enumerate(users):
            for user_b, group_b in users[i + 1 :]:
                p = spec.p_in if group_a == group_b else spec.p_out
                if rng.random() < p:
                    fh.write(f"{user_a},{user_b}\n")

    truth = Partition({u: g for u, g in users}, spec.groups, spec.groups)
    truth_path = out / "ground_truth.txt"
    save_partition(truth, truth_path)
    return GeneratedFixture(corpus_path, edges_path, lexicon_path, truth_path, truth)


# Recorded fixture recipes used by the regression and acceptance suites.
# Seeds are part of the recorded contract: changing one invalidates the
# frozen expectations downstream.
RECOVERY_SPEC = default_spec(
    groups=2, nodes_per_group=10, p_in=0.8, p_out=0.02, rng_seed=42
)
TREND_SPEC = default_spec(
    groups=4, nodes_per_group=8, p_in=0.8, p_out=0.05, rng_seed=7
)
SCALE_SPEC = default_spec(
    groups=5, nodes_per_group=17, p_in=0.5, p_out=0.02, rng_seed=11,
    tokens_per_user=200,
)
