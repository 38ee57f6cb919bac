"""Command-line interface: compute, verify, export.

Subcommands
-----------
transition  emit a change-of-basis matrix between b1, b2, b3
product     emit structure constants of a normalized or ordinary product
betti       emit the Betti table up to a maximum degree
pairs       emit the incidence pairs of one degree
verify      run an identity suite; exit 0 iff everything passes

Output is deterministic: fixed key orders and canonical fraction
strings, never floats.  Matrices are cached as JSON documents under
the cache directory (flag ``--cache-dir``, else the environment
variable NESTFOCK_CACHE_DIR, else ``.nestfock-cache``).
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

from .basis_change import (
    BASIS_TAGS,
    CacheError,
    cache_load,
    cache_store,
    key_from_obj,
    key_to_obj,
    operator_keys,
    pair_keys,
    transition_matrix,
)
from .fock import FockVector
from .incidence import betti_series
from .ring import OrdinaryClass, ordinary_cup, star_b1, star_tilde
from .verify import SUITES, run_suite

DEFAULT_CACHE_DIR = ".nestfock-cache"
PRODUCT_BASES = ("b1", "b2", "ordinary")


@dataclass
class Config:
    cache_dir: Path
    fmt: str
    max_degree: int

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise ValueError("max degree must be nonnegative")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


def _add_common(parser: argparse.ArgumentParser, top: bool) -> None:
    # accepted both before and after the subcommand; the later wins
    default = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument(
        "--cache-dir",
        default=default(None),
        help="matrix cache directory (default: $NESTFOCK_CACHE_DIR or .nestfock-cache)",
    )
    parser.add_argument("--format", choices=("json", "csv"), default=default("json"))
    parser.add_argument(
        "--max-degree",
        type=int,
        default=default(12),
        help="largest degree the CLI will compute",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestfock",
        description="Exact calculator for the incidence Hilbert scheme Fock module.",
    )
    _add_common(parser, top=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, top=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transition", help="change-of-basis matrix", parents=[common])
    p.add_argument("--from", dest="source", choices=BASIS_TAGS, required=True)
    p.add_argument("--to", dest="target", choices=BASIS_TAGS, required=True)
    p.add_argument("--degree", "-n", type=int, required=True)

    p = sub.add_parser("product", help="structure constants", parents=[common])
    p.add_argument("--basis", choices=PRODUCT_BASES, required=True)
    p.add_argument("--degree", "-n", type=int, required=True)
    p.add_argument("--a", help="left key as JSON (full table when omitted)")
    p.add_argument("--b", help="right key as JSON (full table when omitted)")

    p = sub.add_parser("betti", help="Betti table", parents=[common])
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("pairs", help="incidence pairs of one degree", parents=[common])
    p.add_argument("--degree", "-n", type=int, required=True)

    p = sub.add_parser("verify", help="run an identity suite", parents=[common])
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    p.add_argument("--max-n", type=int, default=None)

    return parser


def _config(args: argparse.Namespace) -> Config:
    cache_dir = args.cache_dir or os.environ.get("NESTFOCK_CACHE_DIR") or DEFAULT_CACHE_DIR
    return Config(Path(cache_dir), args.format, args.max_degree)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _emit_csv(rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _key_str(tag: str, key) -> str:
    return json.dumps(key_to_obj(tag, key), separators=(",", ":"))


def cmd_transition(args: argparse.Namespace, cfg: Config, parser) -> int:
    n = args.degree
    if n < 0 or n > cfg.max_degree:
        parser.error(f"degree {n} outside [0, {cfg.max_degree}]")
    matrix = cache_load(args.source, args.target, n, cfg.cache_dir)
    if matrix is None:
        matrix = transition_matrix(args.source, args.target, n)
        cache_store(matrix, cfg.cache_dir)
    if cfg.fmt == "json":
        _emit_json(matrix.to_json_doc())
    else:
        header = ["key"] + [_key_str(matrix.target, k) for k in matrix.col_keys]
        rows = [header]
        for key, row in zip(matrix.row_keys, matrix.rows):
            rows.append([_key_str(matrix.source, key)] + [str(x) for x in row])
        _emit_csv(rows)
    return 0


def _product_table(basis: str, n: int, left=None, right=None):
    """Structure-constant triples of one product, in canonical key order."""
    if basis == "b1":
        keys = list(pair_keys(n))
        mult = lambda x, y: star_b1(FockVector.unit(x), FockVector.unit(y), n)
    elif basis == "b2":
        keys = list(operator_keys(n))
        mult = lambda x, y: star_tilde(FockVector.unit(x), FockVector.unit(y))
    else:
        keys = list(operator_keys(n))
        mult = lambda x, y: ordinary_cup(
            OrdinaryClass(n, FockVector.unit(x)), OrdinaryClass(n, FockVector.unit(y))
        ).vec
    tag = "b1" if basis == "b1" else "b2"
    lefts = [left] if left is not None else keys
    rights = [right] if right is not None else keys
    triples = []
    for a in lefts:
        for b in rights:
            prod = mult(a, b)
            for c in keys:
                coeff = prod[c]
                if coeff:
                    triples.append(
                        {
                            "a": key_to_obj(tag, a),
                            "b": key_to_obj(tag, b),
                            "c": key_to_obj(tag, c),
                            "coeff": str(coeff),
                        }
                    )
    return triples


def cmd_product(args: argparse.Namespace, cfg: Config, parser) -> int:
    n = args.degree
    if n < 0 or n > cfg.max_degree:
        parser.error(f"degree {n} outside [0, {cfg.max_degree}]")
    tag = "b1" if args.basis == "b1" else "b2"
    left = right = None
    try:
        if args.a is not None:
            left = key_from_obj(tag, json.loads(args.a))
        if args.b is not None:
            right = key_from_obj(tag, json.loads(args.b))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        parser.error(f"cannot parse key: {exc}")
    keys = pair_keys(n) if args.basis == "b1" else operator_keys(n)
    for key, label in ((left, "a"), (right, "b")):
        if key is not None and key not in keys:
            parser.error(f"--{label} is not a degree-{n} {args.basis} key")
    triples = _product_table(args.basis, n, left, right)
    if cfg.fmt == "json":
        _emit_json({"degree": n, "basis": args.basis, "triples": triples})
    else:
        rows = [["a", "b", "c", "coeff"]]
        for t in triples:
            rows.append(
                [
                    json.dumps(t["a"], separators=(",", ":")),
                    json.dumps(t["b"], separators=(",", ":")),
                    json.dumps(t["c"], separators=(",", ":")),
                    t["coeff"],
                ]
            )
        _emit_csv(rows)
    return 0


def cmd_betti(args: argparse.Namespace, cfg: Config, parser) -> int:
    if args.max_n < 0 or args.max_n > cfg.max_degree:
        parser.error(f"max-n {args.max_n} outside [0, {cfg.max_degree}]")
    table = betti_series(args.max_n)
    if cfg.fmt == "json":
        _emit_json(table)
    else:
        rows = [["n"] + [f"b_{2 * k}" for k in range(args.max_n + 1)]]
        for n, bs in enumerate(table):
            rows.append([str(n)] + [str(b) for b in bs])
        _emit_csv(rows)
    return 0


def cmd_pairs(args: argparse.Namespace, cfg: Config, parser) -> int:
    n = args.degree
    if n < 0 or n > cfg.max_degree:
        parser.error(f"degree {n} outside [0, {cfg.max_degree}]")
    pairs = [p.as_json_obj() for p in pair_keys(n)]
    if cfg.fmt == "json":
        _emit_json(pairs)
    else:
        rows = [["lambda", "mu"]]
        for p in pairs:
            rows.append(
                [
                    json.dumps(p["lambda"], separators=(",", ":")),
                    json.dumps(p["mu"], separators=(",", ":")),
                ]
            )
        _emit_csv(rows)
    return 0


def cmd_verify(args: argparse.Namespace, cfg: Config, parser) -> int:
    if args.max_n is not None and (args.max_n < 0 or args.max_n > cfg.max_degree):
        parser.error(f"max-n {args.max_n} outside [0, {cfg.max_degree}]")
    results = run_suite(args.suite, args.max_n)
    failed = 0
    for r in results:
        if r.ok:
            sys.stdout.write(f"ok   {r.name}\n")
        else:
            failed += 1
            sys.stdout.write(f"FAIL {r.name}: {r.detail}\n")
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    handlers = {
        "transition": cmd_transition,
        "product": cmd_product,
        "betti": cmd_betti,
        "pairs": cmd_pairs,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, cfg, parser)
    except CacheError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
