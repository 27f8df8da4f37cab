"""Content similarity: tf-idf term vectors and pairwise cosine.

Term vectors are sparse maps (term -> weight, zeros omitted).  The log in
the inverse document frequency is natural; any fixed base rescales every
idf uniformly and cancels in the cosine, so the choice is unobservable in
the similarity values.  Terms present in every document get idf 0 and drop
out of the vectors: they carry no discriminative signal.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Mapping, Sequence

from .corpus import Corpus

# Sparse tf-idf vector: term -> positive weight.
TermVector = dict[str, float]


class SymmetricMatrix:
    """Pairwise values in [0, 1] over an ordered node list, zero diagonal.

    Only the upper triangle is stored; ``get`` is symmetric by construction.
    """

    __slots__ = ("nodes", "_index", "_values")

    def __init__(self, nodes: Sequence[str]):
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node ids")
        self._index = {u: i for i, u in enumerate(self.nodes)}
        n = len(self.nodes)
        self._values = [0.0] * (n * (n - 1) // 2)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def _offset(self, u: str, v: str) -> int:
        try:
            i, j = self._index[u], self._index[v]
        except KeyError as exc:
            raise KeyError(f"unknown node {exc.args[0]!r}") from None
        if i > j:
            i, j = j, i
        n = len(self.nodes)
        return i * n - i * (i + 1) // 2 + (j - i - 1)

    def set(self, u: str, v: str, value: float) -> None:
        if u == v:
            raise ValueError("diagonal entries are fixed at 0")
        if not -1e-9 <= value <= 1.0 + 1e-9:
            raise ValueError(f"matrix value out of [0, 1]: {value!r}")
        self._values[self._offset(u, v)] = min(1.0, max(0.0, value))

    def get(self, u: str, v: str) -> float:
        if u == v:
            if u not in self._index:
                raise KeyError(f"unknown node {u!r}")
            return 0.0
        return self._values[self._offset(u, v)]

    def write_csv(self, path, precision: int = 6) -> None:
        """Full square matrix with row/column labels, fixed decimal places."""
        lines = ["node," + ",".join(self.nodes)]
        for u in self.nodes:
            row = (f"{self.get(u, v):.{precision}f}" for v in self.nodes)
            lines.append(u + "," + ",".join(row))
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")


def term_frequency(tokens: Sequence[str]) -> dict[str, float]:
    """Per-term share of the token sequence; values sum to 1.

    The empty sequence maps to the empty dict (treated as the zero vector
    by callers) rather than raising.
    """
    if not tokens:
        return {}
    total = len(tokens)
    counts = Counter(tokens)
    return {t: counts[t] / total for t in sorted(counts)}


def inverse_document_frequency(corpus: Corpus) -> dict[str, float]:
    """ln(corpus size / document frequency) for every vocabulary term."""
    n_docs = corpus.n_documents
    return {t: math.log(n_docs / corpus.doc_frequency[t]) for t in corpus.vocabulary}


def tfidf_vector(tokens: Sequence[str], idf: Mapping[str, float]) -> TermVector:
    """Sparse tf * idf vector; zero-product entries are omitted.

    ``idf`` must cover every term in ``tokens``.
    """
    vector: TermVector = {}
    for term, tf in term_frequency(tokens).items():
        weight = tf * idf[term]
        if weight > 0.0:
            vector[term] = weight
    return vector


def cosine_similarity(v1: TermVector, v2: TermVector) -> float:
    """Cosine of two sparse non-negative vectors, in [0, 1].

    Zero-norm inputs (empty vectors) are defined as similarity 0.
    """
    if not v1 or not v2:
        return 0.0
    if len(v2) < len(v1):
        v1, v2 = v2, v1
    dot = sum(w * v2[t] for t, w in v1.items() if t in v2)
    if dot == 0.0:
        return 0.0
    norm1 = math.sqrt(sum(w * w for w in v1.values()))
    norm2 = math.sqrt(sum(w * w for w in v2.values()))
    return min(1.0, max(0.0, dot / (norm1 * norm2)))


def user_vectors(corpus: Corpus) -> dict[str, TermVector]:
    """One tf-idf vector per user, keyed in user order."""
    idf = inverse_document_frequency(corpus)
    return {u: tfidf_vector(corpus.docs_by_user[u], idf) for u in corpus.users}


def similarity_matrix(corpus: Corpus) -> SymmetricMatrix:
    """Pairwise cosine similarity of all user vectors."""
    vectors = user_vectors(corpus)
    matrix = SymmetricMatrix(corpus.users)
    for i, u in enumerate(corpus.users):
        for v in corpus.users[i + 1 :]:
            matrix.set(u, v, cosine_similarity(vectors[u], vectors[v]))
    return matrix
