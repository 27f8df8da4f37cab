"""Undirected weighted graphs over string node ids.

Edge weights fuse the two attribute signals on the structural edge set:
``W(u, v) = alpha * s(u, v) + (1 - alpha) * sv(u, v)`` with ``alpha`` = 0.5
by default.  Zero-weight edges stay in the edge set (structure and weights
are separate concerns); they contribute nothing to strengths or scores.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .corpus import EdgeList
from .errors import GraphError, ParameterError, ParseError
from .similarity import SymmetricMatrix


class WeightedGraph:
    """Immutable undirected weighted graph; adjacency sorted by neighbor id."""

    __slots__ = ("nodes", "_index", "_adjacency", "_edges", "total_weight")

    def __init__(self, nodes: Sequence[str], weighted_edges: Iterable[tuple[str, str, float]]):
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise GraphError("duplicate node ids")
        self._index = {u: i for i, u in enumerate(self.nodes)}
        canonical: dict[tuple[str, str], float] = {}
        for u, v, w in weighted_edges:
            if u not in self._index or v not in self._index:
                raise GraphError(f"edge ({u!r}, {v!r}) references an unknown node")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if w < 0.0:
                raise GraphError(f"negative weight on edge ({u!r}, {v!r})")
            key = (u, v) if u < v else (v, u)
            if key in canonical:
                raise GraphError(f"duplicate edge {key!r}")
            canonical[key] = float(w)
        self._edges = tuple((u, v, canonical[(u, v)]) for u, v in sorted(canonical))
        adjacency: dict[str, list[tuple[str, float]]] = {u: [] for u in self.nodes}
        for u, v, w in self._edges:
            adjacency[u].append((v, w))
            adjacency[v].append((u, w))
        self._adjacency = {u: tuple(sorted(adjacency[u])) for u in self.nodes}
        self.total_weight = math.fsum(w for _, _, w in self._edges)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def has_node(self, node: str) -> bool:
        return node in self._index

    def neighbors(self, node: str) -> tuple[tuple[str, float], ...]:
        try:
            return self._adjacency[node]
        except KeyError:
            raise GraphError(f"unknown node {node!r}") from None

    def strength(self, node: str) -> float:
        """Weighted degree: sum of incident edge weights."""
        return math.fsum(w for _, w in self.neighbors(node))

    def edges(self) -> tuple[tuple[str, str, float], ...]:
        """Canonical edge tuples (min id first, sorted)."""
        return self._edges

    def write_csv(self, path, precision: int = 6) -> None:
        """``u,v,weight`` lines; isolated nodes appear as ``u,,`` so the
        node set round-trips through :func:`read_csv`."""
        lines = [f"{u},," for u in sorted(self.nodes) if not self._adjacency[u]]
        lines.extend(f"{u},{v},{w:.{precision}f}" for u, v, w in self._edges)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))

    @classmethod
    def read_csv(cls, path) -> "WeightedGraph":
        """Load a graph written by :meth:`write_csv`; nodes come out sorted."""
        nodes: set[str] = set()
        edges: list[tuple[str, str, float]] = []
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line:
                    continue
                fields = line.split(",")
                if len(fields) != 3:
                    raise ParseError(f"{path}: line {lineno}: expected 'u,v,weight'")
                u, v, w_field = (f.strip() for f in fields)
                if not u:
                    raise ParseError(f"{path}: line {lineno}: empty node id")
                if not v and not w_field:
                    nodes.add(u)
                    continue
                try:
                    w = float(w_field)
                except ValueError:
                    raise ParseError(f"{path}: line {lineno}: weight is not a number") from None
                nodes.update((u, v))
                edges.append((u, v, w))
        return cls(tuple(sorted(nodes)), edges)


def build_weighted_graph(
    edges: EdgeList,
    s: SymmetricMatrix,
    sv: SymmetricMatrix,
    alpha: float = 0.5,
) -> WeightedGraph:
    """Fuse content similarity ``s`` and sentiment bias ``sv`` into edge weights.

    Both matrices must share one node order; nodes without edges are kept as
    isolated vertices.  ``alpha`` is the content-similarity share of the
    weight (0.5 weights both signals equally; 1 ignores sentiment).
    """
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must be in [0, 1], got {alpha!r}")
    if s.nodes != sv.nodes:
        raise GraphError("similarity and bias matrices disagree on node order")
    weighted = []
    for u, v in edges.edges:
        try:
            weight = alpha * s.get(u, v) + (1.0 - alpha) * sv.get(u, v)
        except KeyError:
            raise GraphError(f"edge ({u!r}, {v!r}) references an unknown node") from None
        weighted.append((u, v, weight))
    return WeightedGraph(s.nodes, weighted)


def structural_graph(edges: EdgeList, nodes: Sequence[str]) -> WeightedGraph:
    """Unit-weight graph on the structural edge set."""
    return WeightedGraph(nodes, [(u, v, 1.0) for u, v in edges.edges])
