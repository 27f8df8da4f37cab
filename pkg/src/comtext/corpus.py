"""Ingestion of user texts and interaction edges.

A corpus file is JSON-lines: one object per line with string fields
``user_id`` and ``text``.  Multiple lines for the same user are merged into a
single token sequence, because every network node carries exactly one text
vector downstream.  An edge file is two-column CSV (``id_a,id_b``, no header).
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError


@dataclass(frozen=True)
class TokenizerConfig:
    """How raw text is turned into tokens.

    With ``pretokenized=True`` the text is taken as already segmented
    (e.g. by an external Chinese segmenter) and is only split on
    ``token_delim``; otherwise a Unicode-aware splitter is used.
    """

    pretokenized: bool = False
    token_delim: str = " "

    def __post_init__(self):
        if not self.token_delim:
            raise ValueError("token_delim must be a non-empty string")


DEFAULT_TOKENIZER = TokenizerConfig()


def _is_token_char(ch: str) -> bool:
    # Letters, combining marks and numbers form tokens; everything else
    # (whitespace, punctuation, symbols, controls) separates them.
    return unicodedata.category(ch)[0] in "LMN"


def tokenize(text: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> list[str]:
    """Lowercase and split ``text`` into tokens; empty tokens are dropped.

    Idempotent on its own output joined by single spaces.
    """
    if config.pretokenized:
        return [t.lower() for t in text.split(config.token_delim) if t]
    tokens: list[str] = []
    current: list[str] = []
    for ch in text.lower():
        if _is_token_char(ch):
            current.append(ch)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


@dataclass(frozen=True)
class Document:
    user_id: str
    text: str


@dataclass(frozen=True)
class Corpus:
    """Per-user merged token sequences plus the corpus vocabulary.

    ``users`` is sorted (the determinism anchor for every matrix built on
    top); ``doc_frequency[t]`` counts how many users' merged documents
    contain term ``t``, so it is always >= 1 for vocabulary terms.
    """

    users: tuple[str, ...]
    docs_by_user: dict[str, tuple[str, ...]]
    vocabulary: tuple[str, ...]
    doc_frequency: dict[str, int]

    @property
    def n_documents(self) -> int:
        # One merged document per user, empty ones included.
        return len(self.users)


def build_corpus(
    documents: Iterable[Document], config: TokenizerConfig = DEFAULT_TOKENIZER
) -> Corpus:
    """Merge documents per user (in input order) and build the vocabulary."""
    merged: dict[str, list[str]] = {}
    for doc in documents:
        if not doc.user_id:
            raise ValueError("user_id must be non-empty")
        merged.setdefault(doc.user_id, []).extend(tokenize(doc.text, config))
    users = tuple(sorted(merged))
    docs = {u: tuple(merged[u]) for u in users}
    freq: dict[str, int] = {}
    for u in users:
        for term in set(docs[u]):
            freq[term] = freq.get(term, 0) + 1
    vocabulary = tuple(sorted(freq))
    return Corpus(users, docs, vocabulary, {t: freq[t] for t in vocabulary})


def load_corpus(path, config: TokenizerConfig = DEFAULT_TOKENIZER) -> Corpus:
    """Read a JSON-lines corpus file.

    Raises ParseError for malformed lines (naming the line number) and for
    an empty file.
    """
    documents: list[Document] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise ParseError(f"{path}: line {lineno}: expected a JSON object")
            user_id = record.get("user_id")
            text = record.get("text")
            if not isinstance(user_id, str) or not user_id:
                raise ParseError(f"{path}: line {lineno}: missing or empty 'user_id'")
            if any(ch in user_id for ch in ",\n\r"):
                # commas/newlines would be ambiguous in the CSV and
                # partition export formats
                raise ParseError(
                    f"{path}: line {lineno}: user_id contains a reserved character"
                )
            if not isinstance(text, str):
                raise ParseError(f"{path}: line {lineno}: missing 'text' field")
            documents.append(Document(user_id, text))
    if not documents:
        raise ParseError(f"{path}: empty corpus file")
    return build_corpus(documents, config)


def ensure_users(corpus: Corpus, user_ids: Iterable[str]) -> Corpus:
    """Return a corpus extended with any missing ``user_ids`` as empty documents.

    Used when the edge list mentions users that never wrote text: they keep
    the graph structure but contribute an empty attribute vector.  Note that
    added users count as documents, which enters the inverse-document-
    frequency denominator's corpus size.
    """
    missing = sorted(set(user_ids) - set(corpus.users))
    if not missing:
        return corpus
    users = tuple(sorted(corpus.users + tuple(missing)))
    docs = dict(corpus.docs_by_user)
    for u in missing:
        docs[u] = ()
    docs = {u: docs[u] for u in users}
    return Corpus(users, docs, corpus.vocabulary, dict(corpus.doc_frequency))


@dataclass(frozen=True)
class EdgeList:
    """Canonical undirected edge set: min-id first, sorted, no self-loops."""

    edges: tuple[tuple[str, str], ...]
    self_loops_dropped: int = 0

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "EdgeList":
        canonical: set[tuple[str, str]] = set()
        dropped = 0
        for a, b in pairs:
            if a == b:
                dropped += 1
                continue
            canonical.add((a, b) if a < b else (b, a))
        return cls(tuple(sorted(canonical)), dropped)

    def endpoints(self) -> tuple[str, ...]:
        return tuple(sorted({u for edge in self.edges for u in edge}))


def load_edges(path) -> EdgeList:
    """Read a two-column CSV edge file.

    Self-loop lines are dropped and counted in ``self_loops_dropped``;
    anything that is not exactly two non-empty comma-separated fields is a
    ParseError naming the line.
    """
    pairs: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 2:
                raise ParseError(f"{path}: line {lineno}: expected 'id_a,id_b'")
            a, b = (f.strip() for f in fields)
            if not a or not b:
                raise ParseError(f"{path}: line {lineno}: empty endpoint id")
            pairs.append((a, b))
    return EdgeList.from_pairs(pairs)
