"""Command-line front end.

Subcommands: decomp, bar, schaper, verify, gram.  Exit codes: 0 all passed,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from fockdec import __version__, canonical, schaper, verify
from fockdec.fock import BarMatrix, bar_matrix
from fockdec.hecke import DEFAULT_SIZE_CAP, gram_matrix, gram_rank_at_root
from fockdec.laurent import cyclotomic_valuation
from fockdec.matrices import PartitionMatrix
from fockdec.partitions import format_partition, parse_partition

SCHEMA_VERSION = "fockdec-1"

FORMATS = ("text", "json", "csv", "latex")


def default_cache_dir() -> Path:
    env = os.environ.get("FOCKDEC_CACHE")
    if env:
        return Path(env)
    return Path(".fockdec-cache")


class MatrixCache:
    """JSON file cache keyed by (kind, n, m) and the schema version.

    Entries written by an older schema are silently recomputed.
    """

    def __init__(self, directory: Path):
        self.directory = directory

    def _path(self, kind: str, n: int, m: int) -> Path:
        return self.directory / f"{kind}-n{n}-m{m}.json"

    def load(self, kind: str, n: int, m: int, cls) -> PartitionMatrix | None:
        path = self._path(kind, n, m)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if data.get("schema") != SCHEMA_VERSION:
            return None
        try:
            matrix = cls.from_jsonable(data["matrix"])
        except (KeyError, ValueError):
            return None
        if matrix.n != n or matrix.m != m:
            return None
        return matrix

    def store(self, kind: str, n: int, m: int, matrix: PartitionMatrix) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {"schema": SCHEMA_VERSION, "matrix": matrix.to_jsonable()}
        self._path(kind, n, m).write_text(json.dumps(payload))


def cached_matrix(kind: str, n: int, m: int, cache_dir: Path) -> PartitionMatrix:
    cache = MatrixCache(cache_dir)
    if kind == "decomp":
        cls, compute = canonical.DecompositionMatrix, canonical.decomposition_matrix
    else:
        cls, compute = BarMatrix, bar_matrix
    loaded = cache.load(kind, n, m, cls)
    if loaded is not None:
        return loaded
    matrix = compute(n, m)
    cache.store(kind, n, m, matrix)
    return matrix


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument(
        "--cache-dir",
        type=Path,
        default=None,
        help="matrix cache directory (default: $FOCKDEC_CACHE or ./.fockdec-cache)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockdec",
        description=(
            "Exact canonical bases and q-decomposition matrices of the "
            "level-1 q-Fock space, with sum-formula verification."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_decomp = sub.add_parser("decomp", help="q-decomposition matrix for (n, m)")
    p_decomp.add_argument("--n", type=int, required=True)
    p_decomp.add_argument("--m", type=int, required=True)
    _add_common(p_decomp)

    p_bar = sub.add_parser("bar", help="bar-involution matrix for (n, m)")
    p_bar.add_argument("--n", type=int, required=True)
    p_bar.add_argument("--m", type=int, required=True)
    _add_common(p_bar)

    p_schaper = sub.add_parser(
        "schaper", help="sum-formula vector and verdict for one partition"
    )
    p_schaper.add_argument("--lambda", dest="lam", required=True)
    p_schaper.add_argument("--n", type=int, required=True)
    _add_common(p_schaper)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--max-m", type=int, default=6)
    p_verify.add_argument("--n-set", default="2,3,4,5")
    p_verify.add_argument(
        "--suite",
        default=",".join(verify.ALL_SUITES),
        help="comma-separated suite names (default: all)",
    )
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    _add_common(p_verify)

    p_gram = sub.add_parser("gram", help="Gram determinant report for one partition")
    p_gram.add_argument("--lambda", dest="lam", required=True)
    p_gram.add_argument("--n", type=int, required=True)
    p_gram.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    _add_common(p_gram)

    return parser


def _validate_n(parser, n: int) -> None:
    if n < 2:
        parser.error(f"--n must be at least 2, got {n}")


def _cache_dir(args) -> Path:
    return args.cache_dir if args.cache_dir is not None else default_cache_dir()


def cmd_matrix(parser, args, kind: str) -> int:
    _validate_n(parser, args.n)
    if args.m < 0:
        parser.error(f"--m must be non-negative, got {args.m}")
    matrix = cached_matrix(kind, args.n, args.m, _cache_dir(args))
    sys.stdout.write(matrix.render(args.format))
    return 0


def cmd_schaper(parser, args) -> int:
    _validate_n(parser, args.n)
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        parser.error(str(exc))
    report = schaper.theorem1_check(lam, args.n)
    vector = report.sum_formula
    valuation = schaper.schaper_det_rhs(lam, args.n)
    if args.format == "json":
        payload = {
            "lambda": format_partition(lam),
            "n": args.n,
            "sum_formula": vector.to_json(),
            "det_valuation": valuation,
            "theorem1": "PASS" if report.passed else "FAIL",
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"lambda = ({format_partition(lam)}), n = {args.n}")
        print(f"sum formula vector : {vector!r}")
        print(f"det valuation      : nu = {valuation}")
        print(f"theorem1           : {'PASS' if report.passed else 'FAIL'}")
        if not report.passed:
            print(report.describe())
    return 0 if report.passed else 1


def cmd_verify(parser, args) -> int:
    _parse_err = parser.error
    try:
        n_set = tuple(int(piece) for piece in args.n_set.split(",") if piece.strip())
    except ValueError:
        _parse_err(f"cannot parse --n-set {args.n_set!r}")
    if any(n < 2 for n in n_set):
        _parse_err("--n-set entries must be at least 2")
    if args.max_m < 0:
        _parse_err("--max-m must be non-negative")
    suites = tuple(piece.strip() for piece in args.suite.split(",") if piece.strip())
    unknown = [s for s in suites if s not in verify.ALL_SUITES]
    if unknown:
        _parse_err(f"unknown suites {unknown}; choose from {verify.ALL_SUITES}")
    results = verify.run_verification(
        max_m=args.max_m,
        n_set=n_set,
        suites=suites,
        inject_fault=args.inject_fault,
    )
    if args.format == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        print(verify.render_table(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_gram(parser, args) -> int:
    _validate_n(parser, args.n)
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        gram = gram_matrix(lam, args.size_cap)
    except ValueError as exc:
        parser.error(str(exc))
    det = gram.determinant()
    valuation = cyclotomic_valuation(det, args.n) if not det.is_zero() else None
    rank = gram_rank_at_root(lam, args.n, args.size_cap)
    if args.format == "json":
        payload = {
            "lambda": format_partition(lam),
            "n": args.n,
            "determinant": str(det),
            "nu": valuation,
            "rank_at_root": rank,
            "dimension": len(gram.tableaux),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"lambda = ({format_partition(lam)}), n = {args.n}")
        print(f"gram dimension : {len(gram.tableaux)}")
        print(f"determinant    : {det}")
        print(f"nu(det)        : {valuation}")
        print(f"rank at root   : {rank}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "decomp":
        return cmd_matrix(parser, args, "decomp")
    if args.command == "bar":
        return cmd_matrix(parser, args, "bar")
    if args.command == "schaper":
        return cmd_schaper(parser, args)
    if args.command == "verify":
        return cmd_verify(parser, args)
    if args.command == "gram":
        return cmd_gram(parser, args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
