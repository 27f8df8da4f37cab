"""Lexicon-based sentiment: polar vectors, pairwise composition, bias values.

Each user's text is scored into a polar vector (rho, theta): rho in [0, 1]
is the emotional intensity, theta in [0, pi] encodes polarity as an angle
(fully positive -> 0, neutral -> pi/2, fully negative -> pi).  Two users'
vectors are added in Cartesian coordinates; the normalized magnitude of the
sum and the angular alignment of the pair multiply into the sentiment bias
value, a scalar in [0, 1] on the same scale as content similarity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .corpus import Corpus
from .errors import ParseError
from .similarity import SymmetricMatrix

NEUTRAL_ANGLE = math.pi / 2


@dataclass(frozen=True)
class SentimentLexicon:
    """Term -> score map with scores in [-1, 1]."""

    scores: dict[str, float]

    def __post_init__(self):
        for term, score in self.scores.items():
            if not term:
                raise ValueError("lexicon terms must be non-empty")
            if not -1.0 <= score <= 1.0:
                raise ValueError(f"lexicon score out of [-1, 1] for {term!r}: {score!r}")


def load_lexicon(path) -> SentimentLexicon:
    """Read a TSV lexicon (``term<TAB>score``); ``#`` lines are comments."""
    scores: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ParseError(f"{path}: line {lineno}: expected 'term<TAB>score'")
            term = fields[0].strip()
            if not term:
                raise ParseError(f"{path}: line {lineno}: empty term")
            if term in scores:
                raise ParseError(f"{path}: line {lineno}: duplicate term {term!r}")
            try:
                score = float(fields[1])
            except ValueError:
                raise ParseError(f"{path}: line {lineno}: score is not a number") from None
            if not -1.0 <= score <= 1.0:
                raise ParseError(f"{path}: line {lineno}: score outside [-1, 1]")
            scores[term] = score
    return SentimentLexicon(scores)


@dataclass(frozen=True)
class SentimentVector:
    """Polar sentiment state: intensity ``rho`` and polarity angle ``theta``."""

    rho: float
    theta: float

    def __post_init__(self):
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho out of [0, 1]: {self.rho!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta out of [0, pi]: {self.theta!r}")
        if self.rho == 0.0 and self.theta != NEUTRAL_ANGLE:
            raise ValueError("zero-intensity vectors must use the neutral angle pi/2")


NEUTRAL = SentimentVector(0.0, NEUTRAL_ANGLE)


@dataclass(frozen=True)
class CompositeSentiment:
    """Pairwise combination: normalized magnitude and alignment weight."""

    rho_n: float
    omega_n: float

    def __post_init__(self):
        if not 0.0 <= self.rho_n <= 1.0:
            raise ValueError(f"rho_n out of [0, 1]: {self.rho_n!r}")
        if not 0.0 <= self.omega_n <= 1.0:
            raise ValueError(f"omega_n out of [0, 1]: {self.omega_n!r}")


def score_text(tokens: Sequence[str], lexicon: SentimentLexicon) -> SentimentVector:
    """Polarity = mean lexicon score over matched token occurrences.

    No matches (or exact cancellation) yields the neutral vector.
    """
    matched = [lexicon.scores[t] for t in tokens if t in lexicon.scores]
    if not matched:
        return NEUTRAL
    polarity = min(1.0, max(-1.0, sum(matched) / len(matched)))
    rho = abs(polarity)
    if rho == 0.0:
        return NEUTRAL
    return SentimentVector(rho, (1.0 - polarity) * math.pi / 2)


def compose(e_i: SentimentVector, e_j: SentimentVector) -> CompositeSentiment:
    """Add the two vectors in Cartesian coordinates.

    rho_n is the magnitude of the sum over the sum of magnitudes (0 when
    both inputs are neutral), so it lands in [0, 1] by the triangle
    inequality; omega_n = (1 + cos(theta_i - theta_j)) / 2 rewards angular
    alignment.
    """
    total = e_i.rho + e_j.rho
    if total > 0.0:
        x = e_i.rho * math.cos(e_i.theta) + e_j.rho * math.cos(e_j.theta)
        y = e_i.rho * math.sin(e_i.theta) + e_j.rho * math.sin(e_j.theta)
        rho_n = min(1.0, math.hypot(x, y) / total)
    else:
        rho_n = 0.0
    omega_n = min(1.0, max(0.0, (1.0 + math.cos(e_i.theta - e_j.theta)) / 2.0))
    return CompositeSentiment(rho_n, omega_n)


def bias_value(c: CompositeSentiment) -> float:
    """Sentiment bias value: the product of the two composite components."""
    return c.rho_n * c.omega_n


def bias_matrix(corpus: Corpus, lexicon: SentimentLexicon) -> SymmetricMatrix:
    """Pairwise sentiment bias values over all users; zero diagonal."""
    vectors = {u: score_text(corpus.docs_by_user[u], lexicon) for u in corpus.users}
    matrix = SymmetricMatrix(corpus.users)
    for i, u in enumerate(corpus.users):
        for v in corpus.users[i + 1 :]:
            matrix.set(u, v, bias_value(compose(vectors[u], vectors[v])))
    return matrix
