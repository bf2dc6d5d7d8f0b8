"""Command-line interface.

Exit codes: 0 on success or all checks passing, 1 when any check fails,
2 on usage or parse errors.  ``--json`` switches every command to its
documented JSON schema; all output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .chains import Chain, max_chain, min_chain, parse_chain_text, verify_chain
from .errors import IncompleteDatabaseError, LieChainError
from .formulas import chain_difference, depth, length
from .groups import GroupType, dims, parse_group, product, torus
from .oracle import cross_validate, oracle_depth, oracle_length
from .subgroups import CURATED_SIMPLE, maximal_connected, query_json
from .suites import DEFAULT_MAX_DIM, SUITES, run_suites


def _parse(text: str) -> GroupType:
    return parse_group(text)


def _emit(payload: dict, text: str, as_json: bool) -> None:
    print(json.dumps(payload) if as_json else text)


def _cmd_len(args) -> int:
    g = _parse(args.group)
    value = length(g)
    _emit({"group": str(g), "length": value}, str(value), args.json)
    return 0


def _cmd_depth(args) -> int:
    g = _parse(args.group)
    value = depth(g)
    _emit({"group": str(g), "depth": value.to_json()}, str(value), args.json)
    return 0


def _cmd_cd(args) -> int:
    g = _parse(args.group)
    value = chain_difference(g)
    _emit({"group": str(g), "cd": value.to_json()}, str(value), args.json)
    return 0


def _cmd_dims(args) -> int:
    g = _parse(args.group)
    d = dims(g)
    _emit({"group": str(g), "dim": d.dim, "rank": d.rank},
          f"dim {d.dim}  rank {d.rank}", args.json)
    return 0


def _cmd_maximals(args) -> int:
    g = _parse(args.group)
    if args.json:
        print(json.dumps(query_json(g)))
        return 0
    entries, flag = maximal_connected(g)
    for entry in entries:
        print(f"{entry.subgroup}  [{entry.kind}]")
    status = "complete" if flag.complete else f"incomplete ({flag.reason})"
    print(f"# {len(entries)} maximal connected subgroup types, {status}")
    return 0


def _print_chain(chain: Chain, as_json: bool) -> None:
    if as_json:
        print(json.dumps(chain.to_json()))
    else:
        for node in chain.nodes:
            print(node)


def _cmd_chain(args) -> int:
    g = _parse(args.group)
    if args.min:
        chain = min_chain(g)
        if chain is None:
            print(f"no shortest chain available: depth of {g} is only bounded",
                  file=sys.stderr)
            return 1
    else:
        chain = max_chain(g)
    _print_chain(chain, args.json)
    return 0


def _cmd_verify_chain(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    nodes = parse_chain_text(text)
    report = verify_chain(nodes)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for i, verdict in enumerate(report.verdicts):
            print(f"step {i}: {nodes[i]} > {nodes[i + 1]}: {verdict}")
        print(f"overall: {report.overall}" + (f" ({report.reason})" if report.reason else ""))
    return 0 if report.ok else 1


def _cmd_check_theorems(args) -> int:
    names = [args.suite] if args.suite else sorted(SUITES)
    try:
        results = run_suites(names, max_dim=args.max_degree)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    failed = 0
    for suite, check in results:
        if args.json:
            print(json.dumps({"suite": suite, **check.to_json()}))
        else:
            tag = "PASS" if check.passed else "FAIL"
            print(f"[{tag}] {suite}: {check.claim}: {check.lhs} ({check.rhs})")
        failed += not check.passed
    if not args.json:
        print(f"# {len(results)} checks, {failed} failed")
    return 1 if failed else 0


def _default_oracle_scope() -> list[GroupType]:
    base = [torus(k) for k in range(1, 6)] + [
        GroupType(0, (s,)) for s in sorted(CURATED_SIMPLE, key=lambda s: s.sort_key)]
    scope, seen = [], set()
    for r in (1, 2):
        for combo in itertools.combinations_with_replacement(base, r):
            g = product(combo)
            if g not in seen:
                seen.add(g)
                scope.append(g)
    return scope


def _cmd_oracle(args) -> int:
    if args.cross_validate:
        records = cross_validate(_default_oracle_scope())
        failed = 0
        for record in records:
            failed += not record["pass"]
            if args.json:
                print(json.dumps(record))
            else:
                tag = "PASS" if record["pass"] else "FAIL"
                print(f"[{tag}] {record['group']}: l={record['oracle_l']} "
                      f"depth={record['oracle_depth']}")
        return 1 if failed else 0
    if not args.group:
        print("oracle: need a group or --cross-validate", file=sys.stderr)
        return 2
    g = _parse(args.group)
    l, d = oracle_length(g), oracle_depth(g)
    _emit({"group": str(g), "length": l, "depth": d},
          f"length {l}  depth {d}", args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liechain",
        description="Lengths, depths and unrefinable chains of compact connected Lie groups.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, doc in (
        ("len", _cmd_len, "longest unrefinable chain length"),
        ("depth", _cmd_depth, "shortest unrefinable chain length (or bounds)"),
        ("cd", _cmd_cd, "chain difference (or bounds)"),
        ("dims", _cmd_dims, "dimension and rank"),
        ("maximals", _cmd_maximals, "maximal connected subgroup types"),
    ):
        p = sub.add_parser(name, help=doc)
        p.add_argument("group", help='group spec, e.g. "SU(5) x Sp(6) x T^2"')
        p.set_defaults(fn=fn)

    p = sub.add_parser("chain", help="construct a witness chain")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--max", action="store_true", help="longest chain (default)")
    mode.add_argument("--min", action="store_true", help="shortest chain, when exact")
    p.add_argument("group")
    p.set_defaults(fn=_cmd_chain)

    p = sub.add_parser("verify-chain", help="verify a chain file (one group per line, '1' last)")
    p.add_argument("file", help="path, or '-' for stdin")
    p.set_defaults(fn=_cmd_verify_chain)

    p = sub.add_parser("check-theorems", help="run the verification suites")
    p.add_argument("--suite", choices=sorted(SUITES), help="one suite (default: all)")
    p.add_argument(
        "--max-degree",
        type=int,
        default=int(os.environ.get("LIECHAIN_MAX_DEGREE", DEFAULT_MAX_DIM)),
        help="bound for the enumerations (total dimension; default 60, "
             "or LIECHAIN_MAX_DEGREE)",
    )
    p.set_defaults(fn=_cmd_check_theorems)

    p = sub.add_parser("oracle", help="brute-force length/depth on the curated set")
    p.add_argument("--cross-validate", action="store_true",
                   help="compare formulas and brute force over the curated scope")
    p.add_argument("group", nargs="?", help="group spec")
    p.set_defaults(fn=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except IncompleteDatabaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LieChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
