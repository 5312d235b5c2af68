"""Command-line interface.

Subcommands wire the full pipeline together: parse the feature matrix
and config, normalize and aggregate into scores, classify autonomy
levels, build autonomy coordinates, and rank. Output is a human table
by default; csv and jsonl emit machine-readable rows (6 decimals).

All behavior is driven by files and flags; given identical inputs every
command produces byte-identical output. Set NCAP_NO_COLOR to suppress
ANSI styling (styling is only applied on a tty anyway).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .aggregate import METHODS, ScoreTable, WeightVector, score_table
from .errors import ConfigError, FormatError, NcapError
from .geometry import NcapCoordinate, coordinate_plot_data, distance_report
from .ingest import (
    EvalConfig,
    MissingValuePolicy,
    load_config,
    parse_feature_matrix,
    resolve_missing,
)
from .level import AutonomyLevel, classify
from .ranking import consensus_report, rank_table


@dataclass(frozen=True)
class RunManifest:
    """Everything one command invocation needs, validated up front."""

    command: str
    matrix: Path | None
    scores: Path | None
    config: Path | None
    methods: tuple[str, ...]
    weights: str  # "uniform" | "config"
    missing: MissingValuePolicy | None
    fmt: str  # "table" | "csv" | "jsonl"
    out: Path | None

    def __post_init__(self):
        if not self.methods:
            raise ConfigError("at least one combination method is required")
        for path in (self.matrix, self.scores, self.config):
            if path is not None and not path.is_file():
                raise ConfigError(f"input file not found: {path}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        manifest = _manifest_from_args(args)
        output = _COMMANDS[manifest.command](manifest)
    except NcapError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if manifest.out is not None:
        manifest.out.write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


# ---------------------------------------------------------------- commands


def cmd_score(manifest: RunManifest) -> str:
    """Score every platform under each requested method, with ranks."""
    config = load_config(manifest.config)
    scores = _pipeline_scores(manifest, config)
    ranks = rank_table(scores.columns)
    if manifest.fmt == "csv":
        rows = [["platform", "method", "score", "rank"]]
        for method in scores.methods:
            for platform in scores.platforms:
                rows.append(
                    [
                        platform,
                        method,
                        _fmt6(scores.columns[method][platform]),
                        str(ranks.columns[method][platform]),
                    ]
                )
        return _csv_text(rows)
    if manifest.fmt == "jsonl":
        return _jsonl(
            {
                "platform": platform,
                "scores": {m: _round6(scores.columns[m][platform]) for m in scores.methods},
                "ranks": {m: ranks.columns[m][platform] for m in scores.methods},
            }
            for platform in scores.platforms
        )
    header = ["platform", *scores.methods]
    body = [
        [platform]
        + [
            f"{_fmt2(scores.columns[m][platform])} ({ranks.columns[m][platform]})"
            for m in scores.methods
        ]
        for platform in scores.platforms
    ]
    return _table(header, body)


def cmd_level(manifest: RunManifest) -> str:
    """Classify each configured platform's autonomy level."""
    config = load_config(manifest.config)
    if not config.profiles:
        raise ConfigError("config declares no capability profiles")
    platforms = list(config.profiles)
    if manifest.matrix is not None:
        matrix = parse_feature_matrix(manifest.matrix, config)
        platforms = list(matrix.platforms)
    levels = _levels_for(platforms, config)
    if manifest.fmt == "csv":
        rows = [["platform", "level"]]
        rows += [[p, str(levels[p].value)] for p in platforms]
        return _csv_text(rows)
    if manifest.fmt == "jsonl":
        return _jsonl(
            {"platform": p, "level": levels[p].value, "warnings": list(levels[p].warnings)}
            for p in platforms
        )
    body = []
    for p in platforms:
        note = "; ".join(levels[p].warnings)
        body.append([p, str(levels[p].value), note])
    return _table(["platform", "level", "notes"], body)


def cmd_distance(manifest: RunManifest) -> str:
    """Absolute and reference-relative autonomy distances per method."""
    config = load_config(manifest.config)
    scores = _input_scores(manifest, config)
    coords = _coordinates(scores, config)
    reports = {method: distance_report(coords[method]) for method in scores.methods}
    if manifest.fmt == "csv":
        rows = [["platform", "method", "absolute", "relative", "is_reference"]]
        for method in scores.methods:
            report = reports[method]
            for platform in scores.platforms:
                rows.append(
                    [
                        platform,
                        method,
                        _fmt6(report.absolute[platform]),
                        _fmt6(report.relative[platform]),
                        str(int(platform == report.reference)),
                    ]
                )
        return _csv_text(rows)
    if manifest.fmt == "jsonl":
        return _jsonl(
            {
                "platform": platform,
                "method": method,
                "absolute": _round6(reports[method].absolute[platform]),
                "relative": _round6(reports[method].relative[platform]),
                "is_reference": platform == reports[method].reference,
            }
            for method in scores.methods
            for platform in scores.platforms
        )
    ref_rows = [[m, reports[m].reference] for m in scores.methods]
    header = ["platform", *scores.methods]
    body = [
        [platform] + [_fmt2(reports[m].relative[platform]) for m in scores.methods]
        for platform in scores.platforms
    ]
    return (
        _table(["method", "reference"], ref_rows)
        + "\nrelative autonomy distance to the reference:\n"
        + _table(header, body)
    )


def cmd_plotdata(manifest: RunManifest) -> str:
    """Export <level, performance> coordinates for external plotting."""
    config = load_config(manifest.config)
    scores = _input_scores(manifest, config)
    coords = _coordinates(scores, config)
    ordered = [c for method in scores.methods for c in coords[method]]
    return coordinate_plot_data(ordered)


def cmd_compare(manifest: RunManifest) -> str:
    """Cross-method rank agreement: tau-b matrix and unanimity flags."""
    if manifest.scores is not None:
        scores = _load_score_csv(manifest.scores, manifest.methods)
    else:
        config = load_config(manifest.config)
        scores = _pipeline_scores(manifest, config)
    stats = consensus_report(rank_table(scores.columns))
    if manifest.fmt == "csv":
        rows = [["method_a", "method_b", "tau"]]
        rows += [
            [a, b, _fmt6(stats.tau[(a, b)])]
            for a in stats.methods
            for b in stats.methods
        ]
        return _csv_text(rows)
    if manifest.fmt == "jsonl":
        lines = [
            {"method_a": a, "method_b": b, "tau": _round6(stats.tau[(a, b)])}
            for a in stats.methods
            for b in stats.methods
        ]
        lines.append(
            {"unanimous": {str(r): list(ps) for r, ps in stats.unanimous.items()}}
        )
        return _jsonl(lines)
    header = ["tau", *stats.methods]
    body = [
        [a] + [_fmt2(stats.tau[(a, b)]) for b in stats.methods] for a in stats.methods
    ]
    out = _table(header, body)
    if stats.unanimous:
        out += "unanimous ranks:\n"
        for rank, platforms in sorted(stats.unanimous.items()):
            out += f"  rank {rank}: {', '.join(platforms)}\n"
    else:
        out += "unanimous ranks: none\n"
    return out


_COMMANDS = {
    "score": cmd_score,
    "level": cmd_level,
    "distance": cmd_distance,
    "plotdata": cmd_plotdata,
    "compare": cmd_compare,
}


# ---------------------------------------------------------------- pipeline


def _pipeline_scores(manifest: RunManifest, config: EvalConfig) -> ScoreTable:
    matrix = parse_feature_matrix(manifest.matrix, config)
    policy = manifest.missing or config.missing or MissingValuePolicy.ERROR
    resolved = resolve_missing(matrix, policy)
    if manifest.weights == "config":
        if config.weights is None:
            raise ConfigError("--weights config requested but the config has no weights")
        weights = WeightVector.user_defined(
            [config.weights[name] for name in matrix.feature_names]
        )
    else:
        weights = WeightVector.uniform(len(matrix.features))
    return score_table(resolved, weights, manifest.methods)


def _input_scores(manifest: RunManifest, config: EvalConfig) -> ScoreTable:
    if manifest.scores is not None:
        return _load_score_csv(manifest.scores, manifest.methods)
    return _pipeline_scores(manifest, config)


def _load_score_csv(path: Path, methods: tuple[str, ...]) -> ScoreTable:
    """Read a score table back from cmd_score's csv output (or any file
    with platform,method,score columns)."""
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        fields = reader.fieldnames or []
        needed = {"platform", "method", "score"}
        if not needed.issubset(fields):
            raise FormatError(
                f"score file {path} must have columns platform,method,score"
            )
        platforms: list[str] = []
        columns: dict[str, dict[str, float]] = {m: {} for m in methods}
        for row in reader:
            method = row["method"]
            if method not in columns:
                continue
            platform = row["platform"]
            if platform not in platforms:
                platforms.append(platform)
            try:
                columns[method][platform] = float(row["score"])
            except ValueError:
                raise FormatError(
                    f"score file {path}: bad score {row['score']!r} "
                    f"for ({platform!r}, {method!r})"
                ) from None
    for method, column in columns.items():
        if set(column) != set(platforms):
            raise FormatError(
                f"score file {path} has no complete {method!r} column"
            )
    ordered = {
        m: {p: columns[m][p] for p in platforms} for m in methods
    }
    return ScoreTable(platforms=tuple(platforms), columns=ordered)


def _levels_for(platforms: list[str], config: EvalConfig) -> dict[str, AutonomyLevel]:
    levels = {}
    for platform in platforms:
        profile = config.profiles.get(platform)
        if profile is None:
            raise ConfigError(f"no capability profile for platform {platform!r}")
        levels[platform] = classify(profile)
    return levels


def _coordinates(
    scores: ScoreTable, config: EvalConfig
) -> dict[str, list[NcapCoordinate]]:
    levels = _levels_for(list(scores.platforms), config)
    return {
        method: [
            NcapCoordinate(
                platform=p,
                x=float(levels[p].value),
                y=scores.columns[method][p],
                method=method,
            )
            for p in scores.platforms
        ]
        for method in scores.methods
    }


# ---------------------------------------------------------------- rendering


def _fmt2(x: float) -> str:
    v = round(x, 2)
    if v == 0:
        v = 0.0  # avoid "-0.00"
    return f"{v:.2f}"


def _fmt6(x: float) -> str:
    v = round(x, 6)
    if v == 0:
        v = 0.0
    return f"{v:.6f}"


def _round6(x: float) -> float:
    v = round(x, 6)
    return 0.0 if v == 0 else v


def _csv_text(rows: list[list[str]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue()


def _jsonl(objs) -> str:
    return "".join(json.dumps(obj, sort_keys=True) + "\n" for obj in objs)


def _style(text: str, code: str) -> str:
    if os.environ.get("NCAP_NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _table(header: list[str], body: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(_style(h.ljust(widths[i]), "1") for i, h in enumerate(header)).rstrip()]
    for row in body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- argparse


def _methods_arg(value: str) -> tuple[str, ...]:
    tokens = tuple(token.strip() for token in value.split(",") if token.strip())
    bad = [t for t in tokens if t not in METHODS]
    if bad or not tokens:
        raise argparse.ArgumentTypeError(
            f"methods must be a comma-separated subset of {','.join(METHODS)}"
        )
    return tokens


def _add_common(sub: argparse.ArgumentParser, *, matrix: str, scores: bool, fmt: bool):
    if matrix:
        sub.add_argument("--matrix", type=Path, required=(matrix == "required"),
                         help="feature matrix CSV (platform rows, feature columns)")
    if scores:
        sub.add_argument("--scores", type=Path,
                         help="precomputed score CSV (as emitted by 'score --format csv')")
    sub.add_argument("--config", type=Path, help="evaluation config YAML")
    sub.add_argument("--methods", type=_methods_arg, default=METHODS,
                     help=f"comma-separated combination methods (default {','.join(METHODS)})")
    sub.add_argument("--weights", choices=("uniform", "config"), default="uniform",
                     help="uniform 1/N weights or the config's weight vector")
    sub.add_argument("--missing", choices=tuple(p.value for p in MissingValuePolicy),
                     help="missing-value policy (default: config setting, else error)")
    if fmt:
        sub.add_argument("--format", dest="fmt", choices=("table", "csv", "jsonl"),
                         default="table", help="output format")
    sub.add_argument("--out", type=Path, help="write output to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncap",
        description="Score, rank, and compare platform autonomy from feature data.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    score = subs.add_parser("score", help="component-performance scores with ranks")
    _add_common(score, matrix="required", scores=False, fmt=True)

    level = subs.add_parser("level", help="autonomy levels from capability profiles")
    _add_common(level, matrix="optional", scores=False, fmt=True)

    distance = subs.add_parser("distance", help="absolute and relative autonomy distances")
    _add_common(distance, matrix="optional", scores=True, fmt=True)

    plotdata = subs.add_parser("plotdata", help="autonomy-coordinate CSV export")
    _add_common(plotdata, matrix="optional", scores=True, fmt=False)

    compare = subs.add_parser("compare", help="cross-method rank agreement")
    _add_common(compare, matrix="optional", scores=True, fmt=True)

    return parser


def _manifest_from_args(args: argparse.Namespace) -> RunManifest:
    matrix = getattr(args, "matrix", None)
    scores = getattr(args, "scores", None)
    config = getattr(args, "config", None)
    if args.command in ("distance", "plotdata", "compare") and matrix is None and scores is None:
        raise ConfigError(f"{args.command} needs --matrix or --scores")
    if args.command in ("score", "level", "distance", "plotdata") and config is None:
        raise ConfigError(f"{args.command} needs --config")
    if args.command == "compare" and scores is None and config is None:
        raise ConfigError("compare needs --config when scoring from a matrix")
    missing = MissingValuePolicy(args.missing) if args.missing else None
    return RunManifest(
        command=args.command,
        matrix=matrix,
        scores=scores,
        config=config,
        methods=tuple(args.methods),
        weights=args.weights,
        missing=missing,
        fmt=getattr(args, "fmt", "csv"),
        out=args.out,
    )


if __name__ == "__main__":
    sys.exit(main())
