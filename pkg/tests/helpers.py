"""Shared builders and independent oracles for the test suite.

The oracles deliberately take the long way round: the modularity oracle
sums over all ordered node pairs from an adjacency dict, and the
similarity oracle builds dense vocabulary-length numpy vectors.  They
share no code path with the implementations they check.
"""

from __future__ import annotations

import random

import numpy as np

from comtext.corpus import Corpus, Document, build_corpus
from comtext.detect import Partition
from comtext.graph import WeightedGraph


def random_weighted_graph(rng: random.Random, max_nodes: int = 12) -> WeightedGraph:
    """Random graph with at least one edge; weights are sixteenths so that
    scaling by small factors stays exact in binary floating point."""
    n = rng.randint(2, max_nodes)
    nodes = [f"n{i:02d}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.45:
                edges.append((nodes[i], nodes[j], rng.randint(1, 16) / 16))
    if not edges:
        edges.append((nodes[0], nodes[1], 1.0))
    return WeightedGraph(nodes, edges)


def scaled(g: WeightedGraph, factor: float) -> WeightedGraph:
    return WeightedGraph(g.nodes, [(u, v, w * factor) for u, v, w in g.edges()])


def random_partition(rng: random.Random, nodes) -> Partition:
    """Uniformly random labels, compacted to contiguous community indices."""
    nodes = sorted(nodes)
    raw = [rng.randrange(rng.randint(1, len(nodes))) for _ in nodes]
    remap: dict[int, int] = {}
    assignment = {}
    for node, label in zip(nodes, raw):
        if label not in remap:
            remap[label] = len(remap)
        assignment[node] = remap[label]
    return Partition(assignment, len(remap), 1)


def pairsum_modularity(g: WeightedGraph, p: Partition) -> float:
    """Ordered-pair form: (1/2L) * sum_ij [A_ij - s_i s_j / 2L] delta(c_i, c_j)."""
    adjacency: dict[tuple[str, str], float] = {}
    for u, v, w in g.edges():
        adjacency[(u, v)] = w
        adjacency[(v, u)] = w
    strength = {
        u: sum(adjacency.get((u, v), 0.0) for v in g.nodes) for u in g.nodes
    }
    total = sum(w for _, _, w in g.edges())
    acc = 0.0
    for u in g.nodes:
        for v in g.nodes:
            if p.assignment[u] != p.assignment[v]:
                continue
            a = adjacency.get((u, v), 0.0) if u != v else 0.0
            acc += a - strength[u] * strength[v] / (2.0 * total)
    return acc / (2.0 * total)


def random_corpus(rng: random.Random, max_users: int = 10) -> Corpus:
    n = rng.randint(1, max_users)
    alphabet = [f"t{i}" for i in range(12)]
    docs = []
    for i in range(n):
        length = rng.randint(0, 20)
        text = " ".join(rng.choice(alphabet) for _ in range(length))
        docs.append(Document(f"u{i:02d}", text))
    return build_corpus(docs)


def dense_similarity_oracle(corpus: Corpus) -> np.ndarray:
    """Cosine matrix from dense full-vocabulary tf-idf arrays."""
    vocab = list(corpus.vocabulary)
    index = {t: i for i, t in enumerate(vocab)}
    idf = np.array(
        [np.log(corpus.n_documents / corpus.doc_frequency[t]) for t in vocab]
    )
    vectors = []
    for u in corpus.users:
        tokens = corpus.docs_by_user[u]
        counts = np.zeros(len(vocab))
        for t in tokens:
            counts[index[t]] += 1.0
        tf = counts / len(tokens) if tokens else counts
        vectors.append(tf * idf)
    n = len(vectors)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            ni = np.linalg.norm(vectors[i])
            nj = np.linalg.norm(vectors[j])
            if ni == 0.0 or nj == 0.0:
                continue
            out[i, j] = float(np.dot(vectors[i], vectors[j]) / (ni * nj))
    return out
