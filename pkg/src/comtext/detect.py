"""Two-step seeded community detection.

Step 1 picks k centers greedily: the strongest node first, then repeatedly
the strongest node not adjacent to any chosen center (falling back to the
strongest remaining node when every candidate is adjacent).  Step 2 grows
the k seeded communities in balanced rotation: communities take turns in
index order, and on its turn a community attaches the unassigned node with
the largest connection score (total edge weight into the community's
current members; ties broken by smaller node id), refreshing its
neighbors' candidate scores.  A community with no positively connected
candidate left stops growing; expansion ends when every community has
stopped, and nodes with zero connection to every community end up as
singleton communities.  Assignment is one-shot: nodes are never moved
after they attach.

The rotation keeps one strong seed from starving the others, which a
single global best-first queue does on hub-dominated graphs.  Every choice
is deterministic, and the procedure depends on weights only through
comparisons, so rescaling all weights leaves the partition unchanged.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .errors import GraphError, ParameterError
from .graph import WeightedGraph


@dataclass(frozen=True)
class Partition:
    """Node -> community assignment with contiguous indices 0..m-1."""

    assignment: dict[str, int]
    m: int
    k_requested: int

    def __post_init__(self):
        if set(self.assignment.values()) != set(range(self.m)):
            raise ValueError("community indices must be contiguous and all non-empty")
        if not 1 <= self.k_requested <= self.m:
            raise ValueError("k_requested must be in 1..m")

    def communities(self) -> list[list[str]]:
        """Member lists per community index, each sorted by node id."""
        groups: list[list[str]] = [[] for _ in range(self.m)]
        for node in sorted(self.assignment):
            groups[self.assignment[node]].append(node)
        return groups


def select_centers(g: WeightedGraph, k: int) -> list[str]:
    """Greedy strength-ranked, spread-out center selection (see module doc)."""
    if not isinstance(k, int) or k < 1 or k > g.n:
        raise ParameterError(f"k must be an integer in 1..{g.n}, got {k!r}")
    strength = {u: g.strength(u) for u in g.nodes}
    remaining = set(g.nodes)
    blocked: set[str] = set()
    centers: list[str] = []
    for _ in range(k):
        pool = [u for u in remaining if u not in blocked] or list(remaining)
        best = min(pool, key=lambda u: (-strength[u], u))
        centers.append(best)
        remaining.remove(best)
        blocked.update(v for v, _ in g.neighbors(best))
    return centers


def expand_communities(g: WeightedGraph, centers: list[str]) -> Partition:
    """Grow one community per center by rotating best-connection attachment."""
    if not centers:
        raise ParameterError("centers must be non-empty")
    if len(set(centers)) != len(centers):
        raise ParameterError("duplicate centers")
    for c in centers:
        if not g.has_node(c):
            raise GraphError(f"unknown center {c!r}")

    assignment = {c: i for i, c in enumerate(centers)}
    # Best-known connection score per (node, community); each community's
    # heap holds (-score, node) entries, stale ones skipped on pop.
    scores: dict[tuple[str, int], float] = {}
    heaps: list[list[tuple[float, str]]] = [[] for _ in centers]

    def relax(node: str, community: int, weight: float) -> None:
        score = scores.get((node, community), 0.0) + weight
        scores[(node, community)] = score
        heapq.heappush(heaps[community], (-score, node))

    for center in centers:
        for v, w in g.neighbors(center):
            if v not in assignment and w > 0.0:
                relax(v, assignment[center], w)

    active = deque(range(len(centers)))
    while active:
        community = active.popleft()
        heap = heaps[community]
        node = None
        while heap:
            negscore, candidate = heapq.heappop(heap)
            if candidate in assignment:
                continue
            if scores.get((candidate, community)) != -negscore:
                continue
            node = candidate
            break
        if node is None:
            continue  # community retired: no positively connected candidates
        assignment[node] = community
        for v, w in g.neighbors(node):
            if v not in assignment and w > 0.0:
                relax(v, community, w)
        active.append(community)

    m = len(centers)
    for node in sorted(u for u in g.nodes if u not in assignment):
        assignment[node] = m
        m += 1
    return Partition({u: assignment[u] for u in sorted(assignment)}, m, len(centers))


def detect(g: WeightedGraph, k: int) -> Partition:
    """Full two-step detection: select k centers, then expand."""
    return expand_communities(g, select_centers(g, k))


def format_partition(p: Partition, modularity: float | None = None) -> str:
    """Stable text form: header lines, then one ``index:members`` line each.

    ``modularity`` is written with full float precision so the file
    round-trips exactly; it may be omitted.
    """
    lines = [f"k_requested={p.k_requested}", f"m={p.m}"]
    if modularity is not None:
        lines.append(f"modularity={modularity!r}")
    for index, members in enumerate(p.communities()):
        lines.append(f"{index}:" + ",".join(members))
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> tuple[Partition, float | None]:
    """Inverse of :func:`format_partition`."""
    k_requested = m = None
    modularity: float | None = None
    assignment: dict[str, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("k_requested="):
            k_requested = int(line.partition("=")[2])
        elif line.startswith("m="):
            m = int(line.partition("=")[2])
        elif line.startswith("modularity="):
            modularity = float(line.partition("=")[2])
        else:
            index_field, _, members = line.partition(":")
            index = int(index_field)
            for node in members.split(","):
                if node:
                    assignment[node] = index
    if k_requested is None or m is None:
        raise ValueError("partition text is missing k_requested or m")
    return Partition(assignment, m, k_requested), modularity


def save_partition(p: Partition, path, modularity: float | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_partition(p, modularity))


def load_partition(path) -> tuple[Partition, float | None]:
    with open(path, encoding="utf-8") as fh:
        return parse_partition(fh.read())
