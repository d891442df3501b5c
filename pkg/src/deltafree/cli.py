"""Command-line front end.

Subcommands: ``generate`` (build a family from its defining set),
``check`` (test a family file against a freeness definition), ``classify``
(recover and verify the defining set), ``enumerate`` (exhaustive search),
``partition`` (four-class split against a reference set), ``threshold``
(survival sweep).  Exit codes: 0 the property holds / success, 1 the
property fails (a witness is printed), 2 usage or parse error.

Output on stdout is byte-deterministic for fixed arguments; worker count
(``--jobs``, default from DELTAFREE_JOBS) and timing never change it.
Timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import __version__
from .construction import Generator, generate_family, recognize_generator
from .core import (
    Family,
    elements_of,
    find_closure_violation,
    find_delta_violation,
    find_quadruple_collision,
    find_union_collision,
    is_delta_closed,
    is_delta_free,
    is_quadruple_delta_free,
    is_union_free,
)
from .enumeration import (
    EnumerationBudgetError,
    EnumerationReport,
    enumerate_maximum_families,
)
from .experiments import DEFINITIONS, ExperimentConfig, estimate_survival
from .partition import ALL_CLASSES, partition_family
from .serialization import (
    EMPTY_SET_TOKEN,
    family_from_json,
    family_from_lines,
    family_to_json,
    family_to_lines,
    format_element_set,
    parse_element_set,
)

_CHECKS = {
    "pairwise": (is_delta_free, find_delta_violation),
    "quadruple": (is_quadruple_delta_free, find_quadruple_collision),
    "union": (is_union_free, find_union_collision),
    "closed": (is_delta_closed, find_closure_violation),
}


class CliError(Exception):
    """Usage-level failure; maps to exit code 2."""


_INNER_INT_LIST = re.compile(r"\[\s+(-?\d+(?:,\s+-?\d+)*)\s+\]")


def _print_json(payload: dict) -> None:
    """indent=2 JSON with innermost integer lists collapsed onto one line."""
    text = json.dumps(payload, indent=2)
    text = _INNER_INT_LIST.sub(lambda m: "[" + re.sub(r"\s+", " ", m.group(1)) + "]", text)
    print(text)


def _default_jobs() -> int:
    raw = os.environ.get("DELTAFREE_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_family(path: str, n: int | None) -> Family:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    try:
        if text.lstrip().startswith("{"):
            family = family_from_json(text)
            if n is not None and n != family.n:
                raise ValueError(f"--n {n} contradicts file ground size {family.n}")
            return family
        return family_from_lines(text, n)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def _emit_family(family: Family, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(family_to_json(family))
    else:
        sys.stdout.write(family_to_lines(family))


def _witness_lines(words: tuple[int, ...]) -> str:
    out = ["witness:"]
    for w in words:
        elems = elements_of(w)
        out.append(" ".join(map(str, elems)) if elems else EMPTY_SET_TOKEN)
    return "\n".join(out)


def cmd_generate(args: argparse.Namespace) -> int:
    sc = parse_element_set(args.sc, args.n)
    gen = Generator(args.n, sc)
    _emit_family(generate_family(gen), args.format)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    family = _load_family(args.file, args.n)
    predicate, witness_fn = _CHECKS[args.definition]
    tag = "" if args.definition == "pairwise" else f"({args.definition})"
    if predicate(family):
        print(f"FREE{tag}")
        return 0
    witness = witness_fn(family)
    print(f"NOT-FREE{tag}")
    if witness is not None:
        print(_witness_lines(witness))
    return 1


def cmd_classify(args: argparse.Namespace) -> int:
    family = _load_family(args.file, args.n)
    gen = recognize_generator(family)
    if gen is None:
        print("NOT-GENERATED")
        return 1
    print(f"sc = {format_element_set(gen.sc)}")
    print("GENERATED")
    return 0


def _report_payload(report: EnumerationReport, with_classes: bool) -> dict:
    payload: dict = {
        "n": report.n,
        "total": report.total,
        "all_generated": report.all_generated,
    }
    if with_classes:
        payload["class_sizes"] = list(report.class_sizes)
    payload["families"] = [
        [list(elements_of(w)) for w in fam.members] for fam in report.families
    ]
    return payload


def _cache_path(cache_dir: str, n: int) -> Path:
    return Path(cache_dir) / f"enumeration-n{n}-v{__version__}.json"


def _report_from_cache(path: Path) -> EnumerationReport | None:
    try:
        raw = json.loads(path.read_text())
        families = tuple(
            Family(raw["n"], [sum(1 << (e - 1) for e in s) for s in fam])
            for fam in raw["families"]
        )
        return EnumerationReport(
            n=raw["n"],
            families=families,
            total=raw["total"],
            all_generated=raw["all_generated"],
            class_sizes=tuple(raw["class_sizes"]),
            elapsed=raw["elapsed"],
        )
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _report_to_cache(path: Path, report: EnumerationReport) -> None:
    payload = _report_payload(report, with_classes=True)
    payload["elapsed"] = report.elapsed
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload) + "\n")


def cmd_enumerate(args: argparse.Namespace) -> int:
    report = None
    cache_file = _cache_path(args.cache_dir, args.n) if args.cache_dir else None
    if cache_file is not None and cache_file.exists():
        report = _report_from_cache(cache_file)
    if report is None:
        report = enumerate_maximum_families(args.n, budget=args.budget, jobs=args.jobs)
        if cache_file is not None:
            _report_to_cache(cache_file, report)
    _print_json(_report_payload(report, args.classes))
    print(f"enumerated n={report.n} in {report.elapsed:.3f}s", file=sys.stderr)
    return 0 if report.all_generated else 1


def cmd_partition(args: argparse.Namespace) -> int:
    family = _load_family(args.file, args.n)
    t = parse_element_set(args.t, family.n)
    split = partition_family(family, t)
    names = {pair: f"{pair.card.name.lower()}_{pair.trace.name.lower()}" for pair in ALL_CLASSES}
    payload = {
        "n": family.n,
        "t": list(elements_of(t)),
        "counts": {names[pair]: split.counts[pair] for pair in ALL_CLASSES},
        "classes": {
            names[pair]: [list(elements_of(w)) for w in split.subfamilies[pair].members]
            for pair in ALL_CLASSES
        },
    }
    _print_json(payload)
    return 0


def cmd_threshold(args: argparse.Namespace) -> int:
    if args.steps < 1:
        raise CliError("--steps must be >= 1")
    if args.steps == 1:
        grid = [args.p_min]
    else:
        span = args.p_max - args.p_min
        grid = [args.p_min + span * (i / (args.steps - 1)) for i in range(args.steps)]
        grid[-1] = args.p_max
    try:
        cfg = ExperimentConfig(
            n=args.n,
            p_grid=tuple(grid),
            trials=args.trials,
            seed=args.seed,
            definition=args.definition,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    curve = estimate_survival(cfg, coupled=not args.independent)
    if args.format == "json":
        payload = {
            "n": cfg.n,
            "definition": cfg.definition,
            "seed": cfg.seed,
            "coupled": not args.independent,
        }
        payload.update(curve.as_json_dict())
        _print_json(payload)
    else:
        sys.stdout.write(curve.as_csv())
        crossing = "none" if curve.crossing is None else f"{curve.crossing}"
        print(f"p_half={crossing}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltafree",
        description="Construct, check, classify, enumerate, partition, and "
        "randomly probe symmetric-difference-free set families.",
    )
    parser.add_argument("--version", action="version", version=f"deltafree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build the family defined by a set")
    p.add_argument("--n", type=int, required=True, help="ground size")
    p.add_argument(
        "--sc",
        default="",
        help="defining set, e.g. '3,4,5'; empty for the all-odd family",
    )
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="test a family file for a freeness property")
    p.add_argument("--file", required=True)
    p.add_argument("--definition", choices=sorted(_CHECKS), default="pairwise")
    p.add_argument("--n", type=int, default=None, help="ground size override")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="recover and verify the defining set")
    p.add_argument("--file", required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="exhaustively list maximum families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--classes", action="store_true", help="include isomorphism class sizes")
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--cache-dir", default=None, help="reuse reports cached on disk")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("partition", help="four-class parity split against --t")
    p.add_argument("--file", required=True)
    p.add_argument("--t", required=True, help="reference set, e.g. '1,2,3'")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("threshold", help="survival curve over a probability grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--definition", choices=sorted(DEFINITIONS), default="pairwise")
    p.add_argument(
        "--independent",
        action="store_true",
        help="fresh draws per grid point instead of coupled ones",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_threshold)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
