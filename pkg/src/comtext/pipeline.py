"""End-to-end runs: ingest, attribute matrices, weighted graph, detection.

``run`` drives one mode (weighted or structural) and writes every artifact
into the output directory; ``compare`` runs both modes on the same inputs
and tabulates modularity side by side.  All outputs are deterministic:
identical inputs produce byte-identical output trees.

Edge weights are quantized to the export precision before detection and
scoring, so reloading the exported graph CSV reproduces the reported
numbers exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from .corpus import TokenizerConfig, ensure_users, load_corpus, load_edges
from .detect import Partition, detect, load_partition, save_partition
from .errors import GraphError, ParameterError, ParseError, UndefinedModularityError
from .graph import WeightedGraph, build_weighted_graph, structural_graph
from .metrics import QualityReport, quality_report
from .sentiment import bias_matrix, load_lexicon
from .similarity import similarity_matrix

_MODES = ("weighted", "structural")


class StageError(RuntimeError):
    """A pipeline stage failed; ``stage`` names it for diagnostics."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage {stage}: {message}")


@dataclass(frozen=True)
class RunConfig:
    edges: Path | None = None
    out_dir: Path = Path("out")
    corpus: Path | None = None
    lexicon: Path | None = None
    k_values: tuple[int, ...] = (2,)
    alpha: float = 0.5
    mode: str = "weighted"
    precision: int = 6
    pretokenized: bool = False
    token_delim: str = " "
    graph_path: Path | None = None
    export_matrices: bool = True

    def __post_init__(self):
        if self.edges is None and self.graph_path is None:
            raise ParameterError("an edges file (or a graph reload path) is required")
        if self.mode not in _MODES:
            raise ParameterError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if not self.k_values or any(k < 1 for k in self.k_values):
            raise ParameterError("k values must be positive integers")
        if not 0.0 <= self.alpha <= 1.0:
            raise ParameterError("alpha must be in [0, 1]")
        if self.precision < 1:
            raise ParameterError("precision must be at least 1")

    def tokenizer(self) -> TokenizerConfig:
        return TokenizerConfig(self.pretokenized, self.token_delim)


@dataclass
class RunResult:
    graph: WeightedGraph
    partitions: dict[int, Partition]
    reports: dict[int, QualityReport]
    summary_rows: list[tuple[int, float]] = field(default_factory=list)
    out_dir: Path | None = None


@dataclass
class CompareResult:
    weighted: RunResult
    structural: RunResult
    rows: list[tuple[int, float, float]] = field(default_factory=list)


def _quantize(g: WeightedGraph, precision: int) -> WeightedGraph:
    # Snap weights onto the CSV export grid so in-memory and reloaded
    # graphs agree bit for bit.
    edges = [(u, v, float(f"{w:.{precision}f}")) for u, v, w in g.edges()]
    return WeightedGraph(g.nodes, edges)


def _build_graph(config: RunConfig) -> tuple[WeightedGraph, dict]:
    """Shared front half of a run: inputs through the (quantized) graph."""
    artifacts: dict = {}
    if config.graph_path is not None:
        try:
            loaded = WeightedGraph.read_csv(config.graph_path)
        except (ParseError, GraphError, OSError) as exc:
            raise StageError("graph", str(exc)) from exc
        return _quantize(loaded, config.precision), artifacts

    try:
        edge_list = load_edges(config.edges)
    except (ParseError, OSError) as exc:
        raise StageError("edges", str(exc)) from exc

    corp = None
    if config.corpus is not None:
        try:
            corp = load_corpus(config.corpus, config.tokenizer())
        except (ParseError, ValueError, OSError) as exc:
            raise StageError("corpus", str(exc)) from exc
    elif config.mode == "weighted":
        raise StageError("corpus", "weighted mode requires a corpus file (--corpus)")

    nodes = sorted(set(edge_list.endpoints()) | set(corp.users if corp else ()))
    s = sv = None
    if corp is not None:
        corp = ensure_users(corp, nodes)
        artifacts["corpus"] = corp
        try:
            s = similarity_matrix(corp)
        except ValueError as exc:
            raise StageError("similarity", str(exc)) from exc
        if config.lexicon is not None:
            try:
                lexicon = load_lexicon(config.lexicon)
                sv = bias_matrix(corp, lexicon)
            except (ParseError, ValueError, OSError) as exc:
                raise StageError("sentiment", str(exc)) from exc
        elif config.mode == "weighted":
            raise StageError("sentiment", "weighted mode requires a lexicon file (--lexicon)")
    artifacts["similarity"] = s
    artifacts["bias"] = sv

    try:
        if config.mode == "weighted":
            graph = build_weighted_graph(edge_list, s, sv, config.alpha)
        else:
            graph = structural_graph(edge_list, nodes)
    except (GraphError, ParameterError) as exc:
        raise StageError("graph", str(exc)) from exc
    return _quantize(graph, config.precision), artifacts


def run(config: RunConfig) -> RunResult:
    """Execute one full pipeline pass and write all artifacts."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    graph, artifacts = _build_graph(config)

    if config.export_matrices:
        s = artifacts.get("similarity")
        sv = artifacts.get("bias")
        if s is not None:
            s.write_csv(out / "similarity_matrix.csv", config.precision)
        if sv is not None:
            sv.write_csv(out / "bias_matrix.csv", config.precision)
    graph.write_csv(out / "graph.csv", config.precision)

    partitions: dict[int, Partition] = {}
    reports: dict[int, QualityReport] = {}
    summary_rows: list[tuple[int, float]] = []
    for k in config.k_values:
        try:
            partition = detect(graph, k)
        except (ParameterError, GraphError) as exc:
            raise StageError("detect", str(exc)) from exc
        try:
            report = quality_report(graph, partition)
        except (GraphError, UndefinedModularityError) as exc:
            raise StageError("metrics", str(exc)) from exc
        save_partition(partition, out / f"partition_k{k}.txt", report.modularity)
        report.write_json(out / f"quality_k{k}.json")
        partitions[k] = partition
        reports[k] = report
        summary_rows.append((k, report.modularity))

    with open(out / "summary.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("k,modularity\n")
        for k, q in summary_rows:
            fh.write(f"{k},{q!r}\n")
    return RunResult(graph, partitions, reports, summary_rows, out)


def compare(config: RunConfig) -> CompareResult:
    """Run weighted and structural modes side by side on the same inputs."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    weighted = run(replace(config, mode="weighted", out_dir=out / "weighted"))
    structural = run(replace(config, mode="structural", out_dir=out / "structural"))
    rows = [
        (k, qw, qs)
        for (k, qw), (_, qs) in zip(weighted.summary_rows, structural.summary_rows)
    ]
    with open(out / "compare.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("k,modularity_weighted,modularity_structural\n")
        for k, qw, qs in rows:
            fh.write(f"{k},{qw!r},{qs!r}\n")
    return CompareResult(weighted, structural, rows)


def score(graph_path, partition_path) -> QualityReport:
    """Recompute the quality report for exported graph + partition files."""
    try:
        graph = WeightedGraph.read_csv(graph_path)
    except (ParseError, GraphError, OSError) as exc:
        raise StageError("graph", str(exc)) from exc
    try:
        partition, _ = load_partition(partition_path)
    except (ValueError, OSError) as exc:
        raise StageError("detect", str(exc)) from exc
    try:
        return quality_report(graph, partition)
    except (GraphError, UndefinedModularityError) as exc:
        raise StageError("metrics", str(exc)) from exc
