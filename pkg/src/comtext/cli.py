"""Command-line interface.

Subcommands: ``run`` (one pipeline pass), ``compare`` (weighted vs
structural side by side), ``generate`` (bundled/synthetic fixtures) and
``score`` (re-score exported graph + partition files).  Every ``run`` /
``compare`` flag can also be supplied through a JSON config file
(``--config``); explicit flags override file values.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures, pipeline
from .errors import ParameterError, ParseError
from .pipeline import RunConfig, StageError

_RUN_DEFAULTS = {
    "edges": None,
    "corpus": None,
    "lexicon": None,
    "graph": None,
    "k": "2",
    "alpha": 0.5,
    "mode": "weighted",
    "out": "out",
    "precision": 6,
    "token_delim": " ",
    "pretokenized": False,
    "no_matrices": False,
}


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="JSON file mirroring these flags")
    parser.add_argument("--edges", help="edge CSV file (id_a,id_b per line)")
    parser.add_argument("--corpus", help="JSON-lines corpus file")
    parser.add_argument("--lexicon", help="TSV sentiment lexicon")
    parser.add_argument("--graph", help="reload a previously exported graph CSV")
    parser.add_argument("--k", help="comma-separated center counts, e.g. 2,3,4")
    parser.add_argument("--alpha", type=float, help="content-similarity weight share")
    parser.add_argument("--mode", choices=("weighted", "structural"))
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--precision", type=int, help="decimal places in exports")
    parser.add_argument("--pretokenized", action="store_true", default=None,
                        help="treat corpus text as already segmented")
    parser.add_argument("--token-delim", dest="token_delim",
                        help="delimiter for pre-segmented text (default space)")
    parser.add_argument("--no-matrices", dest="no_matrices", action="store_true",
                        default=None, help="skip matrix CSV exports")


def _merge_config(args: argparse.Namespace) -> dict:
    """Flag value, else config-file value, else built-in default."""
    file_values: dict = {}
    if args.config is not None:
        try:
            file_values = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"config file {args.config}: {exc}") from exc
        if not isinstance(file_values, dict):
            raise ParseError(f"config file {args.config}: expected a JSON object")
        unknown = set(file_values) - set(_RUN_DEFAULTS)
        if unknown:
            raise ParseError(f"config file {args.config}: unknown keys {sorted(unknown)}")
    merged = {}
    for key, default in _RUN_DEFAULTS.items():
        cli_value = getattr(args, key)
        if cli_value is not None:
            merged[key] = cli_value
        elif key in file_values:
            merged[key] = file_values[key]
        else:
            merged[key] = default
    return merged

def _parse_k(value) -> tuple[int, ...]:
    if isinstance(value, int):
        return (value,)
    if isinstance(value, (list, tuple)):
        return tuple(int(k) for k in value)
    try:
        return tuple(int(part) for part in str(value).split(",") if part.strip())
    except ValueError:
        raise ParameterError(f"cannot parse k values from {value!r}") from None


def _run_config(args: argparse.Namespace) -> RunConfig:
    merged = _merge_config(args)
    if merged["edges"] is None and merged["graph"] is None:
        raise ParameterError("--edges (or --graph) is required")
    return RunConfig(
        edges=Path(merged["edges"]) if merged["edges"] else None,
        out_dir=Path(merged["out"]),
        corpus=Path(merged["corpus"]) if merged["corpus"] else None,
        lexicon=Path(merged["lexicon"]) if merged["lexicon"] else None,
        k_values=_parse_k(merged["k"]),
        alpha=float(merged["alpha"]),
        mode=merged["mode"],
        precision=int(merged["precision"]),
        pretokenized=bool(merged["pretokenized"]),
        token_delim=merged["token_delim"],
        graph_path=Path(merged["graph"]) if merged["graph"] else None,
        export_matrices=not merged["no_matrices"],
    )


def _cmd_run(args: argparse.Namespace) -> int:
    result = pipeline.run(_run_config(args))
    print("k  modularity")
    for k, q in result.summary_rows:
        print(f"{k}  {q:.6f}")
    print(f"artifacts written to {result.out_dir}")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    result = pipeline.compare(_run_config(args))
    print("k  modularity_weighted  modularity_structural")
    for k, qw, qs in result.rows:
        print(f"{k}  {qw:.6f}  {qs:.6f}")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    out = Path(args.out)
    if args.karate:
        edge_path, _ = fixtures.write_karate(out)
        print(f"wrote {edge_path} and {out / 'karate_factions.txt'}")
        return 0
    spec = fixtures.default_spec(
        groups=args.groups,
        nodes_per_group=args.nodes_per_group,
        p_in=args.p_in,
        p_out=args.p_out,
        rng_seed=args.seed,
        tokens_per_user=args.tokens_per_user,
    )
    fixture = fixtures.generate(spec, out)
    print(f"wrote {fixture.corpus_path}, {fixture.edges_path}, {fixture.lexicon_path}")
    print(f"ground truth: {fixture.truth_path}")
    return 0


def _cmd_score(args: argparse.Namespace) -> int:
    report = pipeline.score(Path(args.graph), Path(args.partition))
    print(f"modularity {report.modularity:.6f}")
    if args.out:
        report.write_json(Path(args.out))
        print(f"report written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comtext",
        description="Text-attributed social graph community detection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="one pipeline pass (weighted or structural)")
    _add_pipeline_flags(run_p)
    run_p.set_defaults(handler=_cmd_run)

    cmp_p = sub.add_parser("compare", help="weighted vs structural on the same inputs")
    _add_pipeline_flags(cmp_p)
    cmp_p.set_defaults(handler=_cmd_compare)

    gen_p = sub.add_parser("generate", help="write bundled or synthetic fixtures")
    gen_p.add_argument("--out", required=True, help="output directory")
    gen_p.add_argument("--karate", action="store_true",
                       help="write the bundled karate club data instead")
    gen_p.add_argument("--seed", type=int, default=42)
    gen_p.add_argument("--groups", type=int, default=2)
    gen_p.add_argument("--nodes-per-group", dest="nodes_per_group", type=int, default=10)
    gen_p.add_argument("--p-in", dest="p_in", type=float, default=0.8)
    gen_p.add_argument("--p-out", dest="p_out", type=float, default=0.02)
    gen_p.add_argument("--tokens-per-user", dest="tokens_per_user", type=int, default=30)
    gen_p.set_defaults(handler=_cmd_generate)

    score_p = sub.add_parser("score", help="re-score exported graph + partition files")
    score_p.add_argument("--graph", required=True)
    score_p.add_argument("--partition", required=True)
    score_p.add_argument("--out", help="optional JSON report path")
    score_p.set_defaults(handler=_cmd_score)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParameterError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
