"""Command-line front end: JSON in, JSON (or plain numbers) out.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
Diagnostics go to stderr only, so stdout is always machine-readable, and
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import severi
from .corpus import CorpusSpec, iter_corpus
from .errors import DomainError, InvariantViolation
from .intmat import IntMat, hsnf, snf
from .polygons import LatticePolygon
from .verify import run_verification

__all__ = ["main", "entry"]

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INVARIANT_VIOLATION = 2


def _dump(data, pretty: bool) -> str:
    if pretty:
        return json.dumps(data, indent=2)
    return json.dumps(data, separators=(",", ":"))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc


def _load_polygon(path: str) -> LatticePolygon:
    data = _load_json(path)
    if not isinstance(data, dict) or "vertices" not in data:
        raise DomainError(f'{path}: polygon JSON must be {{"vertices": [[x, y], ...]}}')
    vertices = data["vertices"]
    if not isinstance(vertices, list):
        raise DomainError(f"{path}: vertices must be a list")
    return LatticePolygon([tuple(v) for v in vertices])


def _load_matrix(path: str) -> IntMat:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise DomainError(f"{path}: matrix JSON must be an object")
    return IntMat.from_json_dict(data)


def _cmd_analyze(args) -> int:
    polygon = _load_polygon(args.file)
    report = severi.analyze(polygon)  # always dual-checks against the oracle
    print(_dump(report.to_json_dict(), args.pretty))
    return EXIT_OK


def _cmd_count(args) -> int:
    polygon = _load_polygon(args.file)
    count = severi.count_components(polygon)
    if args.oracle:
        oracle = severi.count_components_oracle(polygon)
        if oracle != count:
            raise InvariantViolation(
                f"component count {count} disagrees with the oracle count {oracle}"
            )
    print(count)
    return EXIT_OK


def _cmd_components(args) -> int:
    polygon = _load_polygon(args.file)
    report = severi.analyze(polygon)
    print(_dump([c.to_json_dict() for c in report.components], args.pretty))
    return EXIT_OK


def _cmd_snf(args) -> int:
    res = snf(_load_matrix(args.file))
    out = {
        "Q": res.Q.to_json_dict(),
        "D": res.D.to_json_dict(),
        "P": res.P.to_json_dict(),
    }
    print(_dump(out, args.pretty))
    return EXIT_OK


def _cmd_hsnf(args) -> int:
    res = hsnf(_load_matrix(args.file))
    out = {
        "Q": res.Q.to_json_dict(),
        "A": res.A.to_json_dict(),
        "P": res.P.to_json_dict(),
    }
    print(_dump(out, args.pretty))
    return EXIT_OK


def _cmd_corpus(args) -> int:
    spec = CorpusSpec(
        max_coordinate=args.max_coord, dedup=args.dedup, limit=args.limit
    )
    out_dir: Optional[Path] = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, poly in enumerate(iter_corpus(spec)):
        doc = _dump({"vertices": [list(v) for v in poly.vertices]}, False)
        if out_dir is None:
            print(doc)
        else:
            (out_dir / f"polygon_{i:06d}.json").write_text(doc + "\n", encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verification(
        max_coord=args.max_coord, trials=args.trials, seed=args.seed
    )
    print(report.table())
    return EXIT_OK if report.ok else EXIT_INVARIANT_VIOLATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="severi",
        description=(
            "Count and label the irreducible components of genus-one Severi "
            "varieties of polarized toric surfaces, from the defining lattice "
            "polygon."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pretty(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--json",
            action="store_false",
            dest="pretty",
            default=False,
            help="compact JSON output (default)",
        )
        group.add_argument(
            "--pretty", action="store_true", dest="pretty", help="indented JSON"
        )

    p = sub.add_parser("analyze", help="full component report for a polygon")
    p.add_argument("file", help="polygon JSON file")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="dual-path count check (always on for analyze)",
    )
    add_pretty(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("count", help="number of irreducible components")
    p.add_argument("file", help="polygon JSON file")
    p.add_argument(
        "--oracle", action="store_true", help="also run the brute-force count"
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("components", help="component descriptors only")
    p.add_argument("file", help="polygon JSON file")
    add_pretty(p)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("snf", help="Smith normal form with certificates")
    p.add_argument("file", help="matrix JSON file")
    add_pretty(p)
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("hsnf", help="homogeneous Smith normal form")
    p.add_argument("file", help="matrix JSON file (zero row sums)")
    add_pretty(p)
    p.set_defaults(func=_cmd_hsnf)

    p = sub.add_parser("corpus", help="enumerate box polygons as JSON lines")
    p.add_argument("--max-coord", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", default=None, help="write one file per polygon")
    p.add_argument("--dedup", choices=("translation", "none"), default="translation")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--max-coord", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT_VIOLATION


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
