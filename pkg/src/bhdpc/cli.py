"""Command line front end.

Subcommands:
  construct        build and verify a paired 3-DPC of BH_n
  oracle           exhaustive yes/no (and find-t3) queries on BH_1/BH_2
  validate-tables  check the embedded base-case tables, repairing defects
  export           DOT output for BH_n or for a cover JSON document
  selftest         sample random specs and re-verify the constructor

Exit codes: 0 success, 1 verification/oracle-negative, 2 usage, 3 internal.
Covers are printed as JSON {n, pairs, paths, verified}; the verified flag is
always backed by a fresh verifier run, never assumed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .dpc3 import TerminalSpec, build_3dpc, compute_profile
from .errors import BHDPCError, InvalidTerminals, ParseError, UnrepairableRow
from .tables import validate_all
from .topology import (
    all_nodes,
    edge_dimension,
    format_node,
    is_black,
    is_white,
    neighbors,
    parse_node,
    partition_along,
)
from .verify_oracle import oracle_exists_3dpc, oracle_find_t3, verify_kdpc

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _parse_pairs(text: str) -> list[tuple]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ParseError(f"pair {chunk!r} missing ':'")
        s_txt, t_txt = chunk.split(":", 1)
        pairs.append((parse_node(s_txt), parse_node(t_txt)))
    return pairs


def _split_pairs_arg(text: str) -> list[tuple]:
    # pairs are themselves comma-separated tuples; split on ),( boundaries
    # by tracking parenthesis depth
    chunks, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        chunks.append("".join(cur))
    pairs = []
    for chunk in chunks:
        chunk = chunk.strip()
        if ":" not in chunk:
            raise ParseError(f"pair {chunk!r} missing ':'")
        s_txt, t_txt = chunk.split(":", 1)
        pairs.append((parse_node(s_txt), parse_node(t_txt)))
    return pairs


def _cover_doc(n: int, pairs, paths) -> dict:
    report = verify_kdpc(paths, n, pairs)
    return {
        "n": n,
        "pairs": [[format_node(s), format_node(t)] for s, t in pairs],
        "paths": [[format_node(x) for x in p] for p in paths],
        "verified": report.ok,
    }


def cmd_construct(args) -> int:
    try:
        pairs = _split_pairs_arg(args.pairs)
        spec = TerminalSpec(args.n, tuple(pairs))
    except (ParseError, InvalidTerminals, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    except BHDPCError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 3:
        print(
            "error: construction requires n >= 3 (three-pair covers of BH_2 "
            "do not always exist)",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        cover = build_3dpc(spec)
    except BHDPCError as ex:
        print(f"internal: {ex}", file=sys.stderr)
        return EXIT_INTERNAL
    doc = _cover_doc(spec.n, spec.pairs, cover.paths)
    if not doc["verified"]:
        print("verification failed", file=sys.stderr)
        return EXIT_FAIL
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        pairs = _split_pairs_arg(args.pairs)
    except (ParseError, BHDPCError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    if args.n > 2:
        print("error: oracle scope is n <= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.find_t3:
        if len(pairs) != 2 or len(pairs[0][0]) != 2:
            print("error: --find-t3 takes two pairs plus --s3", file=sys.stderr)
            return EXIT_USAGE
        try:
            s3 = parse_node(args.s3) if args.s3 else None
        except ParseError as ex:
            print(f"error: {ex}", file=sys.stderr)
            return EXIT_USAGE
        if s3 is None:
            print("error: --find-t3 requires --s3", file=sys.stderr)
            return EXIT_USAGE
        (s1, t1), (s2, t2) = pairs
        found = oracle_find_t3((s1, s2, s3), t1, t2)
        print(json.dumps({"t3": [format_node(t) for t in found]}))
        return EXIT_OK if found else EXIT_FAIL
    if len(pairs) != 3:
        print("error: oracle takes three pairs", file=sys.stderr)
        return EXIT_USAGE
    S = [s for s, _ in pairs]
    T = [t for _, t in pairs]
    try:
        witness = oracle_exists_3dpc(args.n, S, T)
    except BHDPCError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    if witness is None:
        print("NO paired 3-DPC exists for this pairing")
        return EXIT_FAIL
    print(json.dumps(_cover_doc(args.n, pairs, witness), indent=2))
    return EXIT_OK


def cmd_validate_tables(args) -> int:
    try:
        verdicts = validate_all()
    except UnrepairableRow as ex:
        print(f"UNREPAIRABLE: {ex}", file=sys.stderr)
        return EXIT_FAIL
    except BHDPCError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    valid = sum(1 for v in verdicts if v.status == "valid")
    corrupted = [v for v in verdicts if v.status == "corrupted"]
    print(f"rows: {len(verdicts)}  valid: {valid}  corrupted: {len(corrupted)}  "
          f"repaired: {len(corrupted)}")
    if args.verbose:
        for v in corrupted:
            print(f"  table {v.row.table} row {v.row.index}: "
                  f"{','.join(v.row.s_letters)} t3={v.row.t3_letter} -> "
                  f"repaired with t3={format_node(v.replacement_t3)}")
    return EXIT_OK


def _dot_graph(n: int, split: int | None) -> str:
    lines = ["graph bh {"]
    pt = partition_along(split, n) if split else None
    for u in all_nodes(n):
        shape = "ellipse" if is_white(u) else "box"
        attrs = [f'shape={shape}']
        if pt:
            attrs.append(f'color={["red","green","blue","orange"][pt.cube_of(u)]}')
        lines.append(f'  "{format_node(u)}" [{",".join(attrs)}];')
    seen = set()
    for u in all_nodes(n):
        for v in set(neighbors(u)):
            if (v, u) in seen:
                continue
            seen.add((u, v))
            style = ""
            if pt and edge_dimension(u, v) == pt.dim:
                style = " [style=dashed]"
            lines.append(f'  "{format_node(u)}" -- "{format_node(v)}"{style};')
    lines.append("}")
    return "\n".join(lines)


def _dot_cover(doc: dict) -> str:
    colors = ["red", "blue", "darkgreen"]
    lines = ["graph cover {"]
    for j, path in enumerate(doc["paths"]):
        col = colors[j % len(colors)]
        for x in path:
            lines.append(f'  "{x}" [color={col}];')
        for x, y in zip(path, path[1:]):
            lines.append(f'  "{x}" -- "{y}" [color={col},penwidth=2];')
    lines.append("}")
    return "\n".join(lines)


def cmd_export(args) -> int:
    if args.cover:
        try:
            with open(args.cover, encoding="utf-8") as fh:
                doc = json.load(fh)
            print(_dot_cover(doc))
        except (OSError, json.JSONDecodeError, KeyError) as ex:
            print(f"error: {ex}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    if args.n is None:
        print("error: export needs --n or --cover", file=sys.stderr)
        return EXIT_USAGE
    if args.partition is not None and not 1 <= args.partition < args.n:
        print("error: --partition must be in 1..n-1", file=sys.stderr)
        return EXIT_USAGE
    print(_dot_graph(args.n, args.partition))
    return EXIT_OK


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    nodes = list(all_nodes(args.n))
    blacks = [u for u in nodes if is_black(u)]
    whites = [u for u in nodes if is_white(u)]
    bad = 0
    cases: dict[str, int] = {}
    for i in range(args.count):
        S = rng.sample(blacks, 3)
        T = rng.sample(whites, 3)
        spec = TerminalSpec(args.n, tuple(zip(S, T)))
        cases[compute_profile(spec).subcase] = cases.get(
            compute_profile(spec).subcase, 0
        ) + 1
        try:
            build_3dpc(spec)
        except BHDPCError as ex:
            bad += 1
            print(f"FAIL {S} {T}: {ex}", file=sys.stderr)
    print(f"selftest n={args.n}: {args.count - bad}/{args.count} ok, "
          f"subcases {cases}")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="bhdpc",
        description="paired 3-disjoint path covers of balanced hypercubes",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="build a verified 3-DPC of BH_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pairs", required=True,
                   help='"(s1):(t1),(s2):(t2),(s3):(t3)" in digit-tuple form')
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", help="exhaustive queries on BH_1/BH_2")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--pairs", required=True)
    p.add_argument("--find-t3", action="store_true",
                   help="list all valid t3 for two pairs plus --s3")
    p.add_argument("--s3", default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate-tables", help="verify the embedded tables")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_validate_tables)

    p = sub.add_parser("export", help="DOT output")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--partition", type=int, default=None)
    p.add_argument("--cover", default=None, help="cover JSON file to render")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("selftest", help="sample specs and re-verify")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BHDPCError as ex:
        print(f"internal: {ex}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
