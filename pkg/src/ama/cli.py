"""Command-line interface.

Subcommands: evaluate, batch, rank, ingest, optimize, anova, compare-ranks,
serve. Machine output (--format csv|json) goes to stdout or --out with
nothing else mixed in; diagnostics go to stderr. Exit codes: 0 ok,
1 runtime/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import AmaError
from .ingest import export_results, load_netpbm, ingest_object_model, parse_layout, serialize_layout
from .metrics import MeasureVector, evaluate
from .optimize import (
    MODE_MATCH_TARGET,
    MODE_MAXIMIZE,
    ObjectiveSpec,
    SearchParams,
    optimize,
)
from .stats import RankVector, one_way_anova, rank_by_value, spearman_rho

MEASURE_NAMES = ("balance", "equilibrium", "symmetry", "sequence", "rhythm", "av")


def _load_layout(path: str):
    with open(path, "r", encoding="utf-8") as f:
        return parse_layout(f.read())


def _write_output(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _measures_table(rows: list[tuple[str, MeasureVector]]) -> str:
    width = max(len(label) for label, _ in rows) if rows else 5
    width = max(width, len("label"))
    header = "label".ljust(width) + "".join(f"  {name:>11}" for name in MEASURE_NAMES)
    lines = [header]
    for label, mv in rows:
        d = mv.as_dict()
        lines.append(label.ljust(width) + "".join(f"  {d[name]:>11.4f}" for name in MEASURE_NAMES))
    return "\n".join(lines) + "\n"


def _cmd_evaluate(args) -> int:
    layout = _load_layout(args.layout)
    mv = evaluate(layout)
    if args.format == "json":
        _write_output(json.dumps(mv.as_dict(), indent=2) + "\n", args.out)
    elif args.format == "csv":
        _write_output(export_results([(Path(args.layout).stem, mv)], "csv"), args.out)
    else:
        _write_output(_measures_table([(Path(args.layout).stem, mv)]), args.out)
    return 0


def _batch_inputs(paths: list[str]) -> list[Path]:
    files: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            files.extend(sorted(p.glob("*.json")))
        else:
            files.append(p)
    return files


def _cmd_batch(args) -> int:
    files = _batch_inputs(args.inputs)
    if not files:
        print("error: no layout files found", file=sys.stderr)
        return 1
    rows = []
    for path in files:
        layout = _load_layout(str(path))
        rows.append((path.stem, evaluate(layout)))
    if args.format == "json":
        _write_output(export_results(rows, "json") + "\n", args.out)
    elif args.format == "csv":
        _write_output(export_results(rows, "csv"), args.out)
    else:
        _write_output(_measures_table(rows), args.out)
    return 0


def _read_labeled_column(path: str, column: str) -> list[tuple[str, float]]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or "label" not in reader.fieldnames:
            raise AmaError(f"{path}: expected a CSV with a 'label' column")
        if column not in reader.fieldnames:
            raise AmaError(f"{path}: no column named {column!r}")
        return [(row["label"], float(row[column])) for row in reader]


def _cmd_rank(args) -> int:
    items = _read_labeled_column(args.results, args.column)
    ranking = rank_by_value(items, descending=True)
    values = dict(items)
    if args.format == "json":
        payload = [
            {"label": label, args.column: values[label], "rank": rank}
            for label, rank in ranking.entries
        ]
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        out = io.StringIO()
        out.write(f"label,{args.column},rank\n")
        for label, rank in ranking.entries:
            out.write(f"{label},{values[label]},{rank}\n")
        _write_output(out.getvalue(), args.out)
    else:
        width = max(max(len(label) for label, _ in ranking.entries), len("label"))
        lines = ["label".ljust(width) + f"  {args.column:>11}  rank"]
        for label, rank in ranking.entries:
            lines.append(label.ljust(width) + f"  {values[label]:>11.4f}  {rank:>4}")
        _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_ingest(args) -> int:
    image = load_netpbm(args.image)
    layout = ingest_object_model(
        image, threshold=args.threshold, invert=args.invert, min_area=args.min_area
    )
    _write_output(serialize_layout(layout) + "\n", args.out)
    return 0


def _parse_five(text: str, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 5:
        raise AmaError(f"{what} needs five comma-separated values, got {text!r}")
    return tuple(float(p) for p in parts)


def _cmd_optimize(args) -> int:
    layout = _load_layout(args.layout)
    if args.maximize or args.weights:
        weights = _parse_five(args.weights, "--weights") if args.weights else (1.0,) * 5
        objective = ObjectiveSpec(mode=MODE_MAXIMIZE, weights=weights)
    elif args.target_av is not None:
        objective = ObjectiveSpec(mode=MODE_MATCH_TARGET, target=args.target_av)
    else:
        objective = ObjectiveSpec(
            mode=MODE_MATCH_TARGET, target=_parse_five(args.target, "--target")
        )
    params = SearchParams(
        seed=args.seed, iterations=args.iters, forbid_overlap=args.no_overlap
    )
    result = optimize(layout, objective, params)
    best = evaluate(result.best_layout)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(serialize_layout(result.best_layout) + "\n")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="") as f:
            f.write("iteration,best_score\n")
            for it, val in result.trace:
                f.write(f"{it},{val!r}\n")

    if args.format == "json":
        payload = {
            "best_score": result.best_score,
            "evaluations": result.evaluations,
            "rng": result.rng,
            "measures": best.as_dict(),
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(export_results([("best", best)], "csv"))
    else:
        print(f"best_score   {result.best_score:.6f}")
        print(f"evaluations  {result.evaluations}")
        print(f"rng          {result.rng}")
        sys.stdout.write(_measures_table([("best", best)]))
    return 0


def _read_groups_csv(path: str) -> list[list[float]]:
    groups: dict[str, list[float]] = {}
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or not {"group", "value"} <= set(reader.fieldnames):
            raise AmaError(f"{path}: expected a CSV with 'group' and 'value' columns")
        for row in reader:
            groups.setdefault(row["group"], []).append(float(row["value"]))
    return [groups[k] for k in groups]  # first-appearance order


def _cmd_anova(args) -> int:
    result = one_way_anova(_read_groups_csv(args.data))
    if args.format == "json":
        payload = {
            "df_between": result.df_between,
            "df_within": result.df_within,
            "f_value": result.f_value,
            "p_value": result.p_value,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write("df_between,df_within,f_value,p_value\n")
        sys.stdout.write(
            f"{result.df_between},{result.df_within},{result.f_value!r},{result.p_value!r}\n"
        )
    else:
        print(f"df_between   {result.df_between}")
        print(f"df_within    {result.df_within}")
        print(f"F            {result.f_value:.6g}")
        print(f"p            {result.p_value:.6g}")
    return 0


def _read_rank_csv(path: str) -> RankVector:
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or not {"label", "rank"} <= set(reader.fieldnames):
            raise AmaError(f"{path}: expected a CSV with 'label' and 'rank' columns")
        entries = [(row["label"], int(row["rank"])) for row in reader]
    return RankVector(entries=tuple(sorted(entries, key=lambda lr: (lr[1], lr[0]))))


def _cmd_compare_ranks(args) -> int:
    rho = spearman_rho(_read_rank_csv(args.a), _read_rank_csv(args.b))
    if args.format == "json":
        sys.stdout.write(json.dumps({"spearman_rho": rho}, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(f"spearman_rho\n{rho!r}\n")
    else:
        print(f"spearman_rho {rho:.6g}")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, host=args.host)
    return 0


def _add_format(parser, default="table"):
    parser.add_argument("--format", choices=("table", "csv", "json"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ama", description="Measure, rank, and search rectangular screen layouts."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score one layout file")
    p.add_argument("layout")
    p.add_argument("--out")
    _add_format(p)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("batch", help="score a corpus of layout files")
    p.add_argument("inputs", nargs="+", metavar="dir|file")
    p.add_argument("--out")
    _add_format(p)
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("rank", help="rank results rows by a column")
    p.add_argument("results")
    p.add_argument("--column", default="av")
    p.add_argument("--out")
    _add_format(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("ingest", help="extract a layout from a Netpbm image")
    p.add_argument("image")
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--invert", action="store_true")
    p.add_argument("--min-area", type=float, default=4.0, dest="min_area")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("optimize", help="search object positions against an objective")
    p.add_argument("layout")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--maximize", action="store_true")
    group.add_argument("--target-av", type=float, dest="target_av")
    group.add_argument("--target")
    p.add_argument("--weights", help="five comma-separated weights for --maximize")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=20_000)
    p.add_argument("--no-overlap", action="store_true", dest="no_overlap")
    p.add_argument("--out")
    p.add_argument("--trace")
    _add_format(p)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("anova", help="one-way ANOVA over a group,value CSV")
    p.add_argument("data")
    _add_format(p)
    p.set_defaults(func=_cmd_anova)

    p = sub.add_parser("compare-ranks", help="Spearman rho between two label,rank CSVs")
    p.add_argument("a")
    p.add_argument("b")
    _add_format(p)
    p.set_defaults(func=_cmd_compare_ranks)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except AmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
