"""Command-line interface: expand, dim, table and verify subcommands.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
Expansion records are emitted as JSON (default) or CSV; the multiplicity-table
memo can be persisted across invocations by pointing HYBRIDWEYL_CACHE_DIR at a
writable directory (the cache is a pure accelerator and never changes output).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import multiplicity
from .hybrid import (
    HybridExpansion,
    dimension,
    expansion,
    orbit_size_sum,
    verify_expansion,
)
from .rootsystem import AlgebraLabel, build_root_system
from .weyl import KINDS

RECORD_SCHEMA_VERSION = 1
CACHE_SCHEMA_VERSION = 1
CACHE_ENV_VAR = "HYBRIDWEYL_CACHE_DIR"
CACHE_FILENAME = "multiplicity-cache.json"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class CliError(Exception):
    """Input error reported to stderr with exit code 1."""


def _parse_algebra(text: str) -> AlgebraLabel:
    try:
        label = AlgebraLabel.parse(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if label.family == "nA1":
        raise CliError("algebra must match letter+rank with letters A,B,C,D,F,G")
    return label


def _parse_lambda(text: str, rank: int):
    parts = text.split(",")
    try:
        coords = tuple(int(p.strip()) for p in parts)
    except ValueError:
        raise CliError(f"lambda {text!r} is not a comma-separated integer list") from None
    if len(coords) != rank:
        raise CliError(f"lambda has {len(coords)} coordinates, algebra has rank {rank}")
    if any(c < 0 for c in coords):
        raise CliError(f"lambda {text!r} has negative coordinates")
    return coords


def make_record(rs, kind: str, lam) -> dict:
    """ExpansionRecord: verified expansion plus its dimension, with terms
    sorted lexicographically descending by weight."""
    exp = expansion(rs, kind, lam)
    verified = verify_expansion(rs, exp)
    dim = dimension(rs, kind, lam)
    if dim != orbit_size_sum(rs, exp):
        raise AssertionError(
            f"dimension {dim} does not match the coefficient-sum identity for "
            f"{rs.label} {kind} {lam}"
        )
    terms = [
        {"mu": list(mu), "coeff": exp.coefficients[mu]}
        for mu in sorted(exp.coefficients, reverse=True)
    ]
    return {
        "schema_version": RECORD_SCHEMA_VERSION,
        "algebra": str(rs.label),
        "lambda": list(lam),
        "kind": kind,
        "dimension": dim,
        "terms": terms,
        "verified": verified,
    }


def record_to_csv(record: dict) -> str:
    buf = io.StringIO()
    for field in ("schema_version", "algebra", "kind", "dimension", "verified"):
        value = record[field]
        if isinstance(value, bool):
            value = "true" if value else "false"
        buf.write(f"# {field}: {value}\n")
    buf.write(f"# lambda: {','.join(str(c) for c in record['lambda'])}\n")
    rank = len(record["lambda"])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"mu_{i}" for i in range(1, rank + 1)] + ["coeff"])
    for term in record["terms"]:
        writer.writerow(list(term["mu"]) + [term["coeff"]])
    return buf.getvalue()


def _emit(records, fmt: str, out):
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
    else:
        out.write("\n".join(record_to_csv(r) for r in records))


# ---------------------------------------------------------------------------
# Persistent multiplicity cache (optional, env-var controlled, atomic writes).

def _cache_path():
    cache_dir = os.environ.get(CACHE_ENV_VAR)
    if not cache_dir:
        return None
    return os.path.join(cache_dir, CACHE_FILENAME)


def _standard_gram(label):
    return build_root_system(label).gram


def _load_disk_cache():
    path = _cache_path()
    if path is None or not os.path.exists(path):
        return
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("schema_version") != CACHE_SCHEMA_VERSION:
            return
        multiplicity.install_cached_tables(payload.get("entries", []), _standard_gram)
    except (OSError, ValueError, KeyError, TypeError):
        # A damaged cache is recomputed from scratch, never partially read.
        return


def _store_disk_cache():
    path = _cache_path()
    if path is None:
        return
    entries = multiplicity.export_cached_tables(_standard_gram)
    payload = {"schema_version": CACHE_SCHEMA_VERSION, "entries": entries}
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_expand(args) -> int:
    rs = build_root_system(_parse_algebra(args.algebra))
    lam = _parse_lambda(args.lam, rs.rank)
    record = make_record(rs, args.kind, lam)
    _emit([record], args.format, sys.stdout)
    return EXIT_OK if record["verified"] else EXIT_VERIFY


def cmd_dim(args) -> int:
    rs = build_root_system(_parse_algebra(args.algebra))
    lam = _parse_lambda(args.lam, rs.rank)
    print(dimension(rs, args.kind, lam))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_coord < 0:
        raise CliError("--max-coord must be >= 0")
    rs = build_root_system(_parse_algebra(args.algebra))
    records = []
    import itertools

    for lam in itertools.product(range(args.max_coord + 1), repeat=rs.rank):
        record = make_record(rs, args.kind, lam)
        if not record["verified"]:
            print(f"verification failed for lambda={lam}", file=sys.stderr)
            return EXIT_VERIFY
        records.append(record)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(records, args.format, fh)
    else:
        _emit(records, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    rs = build_root_system(_parse_algebra(args.algebra))
    lam = _parse_lambda(args.lam, rs.rank)
    exp = expansion(rs, args.kind, lam)
    if verify_expansion(rs, exp):
        print(f"verified: {rs.label} kind={args.kind} lambda={','.join(map(str, lam))}")
        return EXIT_OK
    mismatch = _first_mismatch(rs, exp)
    print(f"verification FAILED at lattice point {mismatch}", file=sys.stderr)
    return EXIT_VERIFY


def _first_mismatch(rs, exp: HybridExpansion):
    from .expsum import multiply, s_function, weighted_c_sum
    from .hybrid import _shift_weight

    shift = _shift_weight(rs, exp.kind)
    lhs = multiply(s_function(rs, exp.kind, shift), weighted_c_sum(rs, exp.coefficients))
    rhs = s_function(rs, exp.kind, tuple(a + b for a, b in zip(shift, exp.highest)))
    diff = lhs.first_difference(rhs)
    return diff[0] if diff else None


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 is reserved for
    # verification failures here, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hybridweyl",
        description="Dominant-weight multiplicities and hybrid characters of "
        "B_n, C_n, F_4, G_2, computed in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kinds=KINDS):
        p.add_argument("--algebra", required=True, help="algebra label, e.g. G2, B3")
        p.add_argument(
            "--lambda",
            dest="lam",
            required=True,
            help="highest weight as comma-separated coordinates, e.g. 2,2",
        )
        p.add_argument("--kind", choices=kinds, default="plain")

    p_expand = sub.add_parser("expand", help="expand a (hybrid) character into orbit sums")
    common(p_expand)
    p_expand.add_argument("--format", choices=("json", "csv"), default="json")
    p_expand.set_defaults(func=cmd_expand)

    p_dim = sub.add_parser("dim", help="print the (hybrid) dimension")
    common(p_dim)
    p_dim.set_defaults(func=cmd_dim)

    p_table = sub.add_parser("table", help="expand every dominant weight up to a bound")
    p_table.add_argument("--algebra", required=True)
    p_table.add_argument("--kind", choices=KINDS, default="plain")
    p_table.add_argument("--max-coord", type=int, required=True)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--out", help="output path (default: stdout)")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the exact certificate for one expansion")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _load_disk_cache()
    try:
        code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _store_disk_cache()
    return code


if __name__ == "__main__":
    sys.exit(main())
