"""``ldh`` command-line front end.

Every command prints ``key=value`` records; ``--pretty`` appends a readable
block. Exit codes: 0 ok, 1 a check or verification failed, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import families as fam
from .analysis import DEFAULT_MAX_N, bounds, lambda_exact, verify_ld
from .checks import CHECKS, check_theorem
from .errors import ConstructionPreconditionFailed, LDHError
from .hypergraph import Hypergraph
from .partitions import coincident_cell_bound, coincident_partition, max_packing
from .textformat import parse_hypergraph, serialize
from .transforms import dual, k_section, level_hypergraph, primal_middle, reduce_sperner

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_ALIASES = {
    "hyperpath": "hyperpath",
    "hypercycle": "hypercycle",
    "hyperstar": "hyperstar",
    "tpartite": "complete_tpartite",
    "complete_tpartite": "complete_tpartite",
    "complete": "complete",
    "path": "simple_path",
    "simple_path": "simple_path",
    "cycle": "simple_cycle",
    "simple_cycle": "simple_cycle",
}


class UsageError(Exception):
    pass


def ids(vertices) -> str:
    vs = sorted(vertices)
    return ",".join(map(str, vs)) if vs else "-"


def parse_ids(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def parse_range(text: str) -> list[int]:
    """``5``, ``4,6`` or ``5..8`` (inclusive)."""
    out: list[int] = []
    try:
        for chunk in text.split(","):
            if ".." in chunk:
                lo, hi = chunk.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(chunk))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return out


def parse_part_groups(text: str) -> list[tuple[int, ...]]:
    return [tuple(parse_ids(g)) for g in text.split(";") if g.strip()]


def _max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("LDH_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"LDH_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _read(args) -> Hypergraph:
    path = args.file
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_hypergraph(data, require_sperner=args.require_sperner, require_connected=args.require_connected)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _set_fields(H: Hypergraph, S, args, key="set") -> str:
    line = f"{key}={ids(S)}"
    if args.labels:
        line += f" {key}_labels=" + (",".join(H.label(v) for v in sorted(S)) or "-")
    return line


def _spec(args) -> fam.FamilySpec:
    kind = FAMILY_ALIASES.get(args.family)
    if kind is None:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILY_ALIASES))}")
    petals = tuple(parse_ids(args.petals)) if args.petals else None
    parts = tuple(parse_ids(args.parts)) if args.parts else None
    return fam.FamilySpec(
        kind,
        m=args.m,
        k=args.k,
        overlap=args.overlap,
        center_size=args.center_size,
        petal_sizes=petals,
        r=args.r,
        part_sizes=parts,
        n=args.n,
    )


# -- commands --------------------------------------------------------------


def cmd_gen(args) -> int:
    H = fam.generate(_spec(args))
    _emit(serialize(H), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = _spec(args)
    p = fam.predicted_lambda(spec)
    line = (
        f"lambda={p.value if p.value is not None else '-'} theorem={p.theorem or '-'} "
        f"preconditions_met={str(p.preconditions_met).lower()}"
    )
    if p.failed_condition:
        line += f' reason="{p.failed_condition}"'
    print(line)
    if args.pretty:
        print(f"\n  family: {spec.describe()}")
        print(f"  predicted lambda: {p.value if p.preconditions_met else 'n/a'}")
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec(args)
    H = fam.generate(spec)
    try:
        S = fam.construct_ld_set(spec)
    except ConstructionPreconditionFailed as exc:
        print(f'construction=rejected witness={ids(exc.witness or ())} reason="{exc}"')
        return EXIT_FAIL
    report = verify_ld(H, S)
    print(f"{_set_fields(H, S, args)} size={len(S)} verdict={report.verdict.value}")
    if args.pretty:
        _pretty_neighborhoods(H, report)
    return EXIT_OK


def cmd_lambda(args) -> int:
    H = _read(args)
    cert = lambda_exact(H, _max_n(args))
    print(f"lambda={cert.value} {_set_fields(H, cert.set, args)}")
    if args.pretty:
        print(f"\n  order n={H.n}, size m={H.m}")
        print(f"  minimum locating-dominating set: {{{ids(cert.set)}}}")
        _pretty_neighborhoods(H, cert.report)
    return EXIT_OK


def cmd_verify(args) -> int:
    H = _read(args)
    S = parse_ids(args.set)
    report = verify_ld(H, S)
    line = f"verdict={report.verdict.value} witness={ids(report.witness or ())}"
    print(line + " " + _set_fields(H, S, args))
    if args.pretty:
        _pretty_neighborhoods(H, report)
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_bounds(args) -> int:
    H = _read(args)
    b = bounds(H)

    def opt(x):
        return "-" if x is None else str(x)

    print(
        f"lower_coincident={b.lower_coincident} upper_trivial={b.upper_trivial} "
        f"upper_packing={opt(b.upper_packing)} linear={str(b.packing_linear).lower()} "
        f"degree_one_ok={str(b.packing_degree_one_ok).lower()} partite_lower={opt(b.partite_lower)}"
    )
    if args.pretty:
        print(f"\n  {b.lower_coincident} <= lambda <= {min(x for x in (b.upper_trivial, b.upper_packing) if x is not None)}")
        if b.partite_parts:
            print("  complete partite parts: " + " | ".join(ids(p) for p in b.partite_parts))
    return EXIT_OK


def cmd_coincident(args) -> int:
    H = _read(args)
    part = coincident_partition(H)
    for c in part:
        print(f"cell degree={c.degree} edges={ids(c.edge_set)} {_set_fields(H, c.members, args, 'members')}")
    print(f"cells={len(part)} bound={coincident_cell_bound(H)}")
    return EXIT_OK


def cmd_packing(args) -> int:
    H = _read(args)
    P = max_packing(H)
    print(f"packing={P.size} {_set_fields(H, P.members, args)}")
    return EXIT_OK


def cmd_transform(args) -> int:
    H = _read(args)
    kind = args.kind
    if kind == "primal":
        out = primal_middle(H)
    elif kind == "dual":
        out = dual(H)
    elif kind == "section":
        if args.k is None:
            raise UsageError("section needs --k")
        out = k_section(H, args.k)
    elif kind == "level":
        out = level_hypergraph(H).hypergraph
    else:
        out = reduce_sperner(H)
    _emit(serialize(out), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    overrides = {}
    for key in ("m", "k", "n", "overlap", "center", "r"):
        val = getattr(args, key)
        if val is not None:
            overrides[key] = parse_range(val)
    if args.parts:
        overrides["parts"] = parse_part_groups(args.parts)
    report = check_theorem(args.theorem, overrides, _max_n(args))
    for line in report.lines():
        print(line)
    if args.pretty:
        print(f"\n  {report.theorem}: {report.title}")
    return EXIT_OK if report.ok else EXIT_FAIL


def _pretty_neighborhoods(H: Hypergraph, report) -> None:
    print(f"  verdict: {report.verdict.value}")
    for v, nb in sorted(report.s_neighborhoods.items()):
        print(f"    N({H.label(v)}) & S = {{{', '.join(H.label(u) for u in sorted(nb))}}}")


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="append a readable report")
    common.add_argument("--labels", action="store_true", help="show vertex labels next to ids")
    common.add_argument("--max-n", type=int, default=None, help=f"solver cap (default {DEFAULT_MAX_N}, env LDH_MAX_N)")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("file", help="hypergraph text file, '-' for stdin")
    graph_in.add_argument("--require-sperner", action="store_true")
    graph_in.add_argument("--require-connected", action="store_true")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("family", help="hyperpath, hypercycle, hyperstar, tpartite, complete, path, cycle")
    family.add_argument("--m", type=int)
    family.add_argument("--k", type=int)
    family.add_argument("--overlap", type=int, default=1)
    family.add_argument("--center-size", type=int)
    family.add_argument("--petals", help="per-edge petal sizes, e.g. 2,3,2")
    family.add_argument("--r", type=int)
    family.add_argument("--parts", help="part sizes, e.g. 2,2")
    family.add_argument("--n", type=int)

    p = argparse.ArgumentParser(prog="ldh", description="Locating-dominating sets in hypergraphs")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("gen", parents=[common, family], help="generate a family member")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    s = sub.add_parser("oracle", parents=[common, family], help="closed-form lambda for a family")
    s.set_defaults(func=cmd_oracle)
    s = sub.add_parser("construct", parents=[common, family], help="explicit LD set for a family")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("lambda", parents=[common, graph_in], help="exact location-domination number")
    s.set_defaults(func=cmd_lambda)
    s = sub.add_parser("verify", parents=[common, graph_in], help="check a candidate set")
    s.add_argument("--set", required=True, help="comma-separated vertex ids")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("bounds", parents=[common, graph_in], help="lower and upper bounds")
    s.set_defaults(func=cmd_bounds)
    s = sub.add_parser("coincident", parents=[common, graph_in], help="coincident-set partition")
    s.set_defaults(func=cmd_coincident)
    s = sub.add_parser("packing", parents=[common, graph_in], help="maximum vertex packing")
    s.set_defaults(func=cmd_packing)

    s = sub.add_parser("transform", parents=[common], help="primal, dual, section, level or reduce")
    s.add_argument("kind", choices=["primal", "dual", "section", "level", "reduce"])
    s.add_argument("file")
    s.add_argument("--k", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--require-sperner", action="store_true")
    s.add_argument("--require-connected", action="store_true")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("check", parents=[common], help="theorem agreement suite")
    s.add_argument("theorem", help="one of: " + ", ".join(CHECKS))
    for key in ("m", "k", "n", "overlap", "center", "r"):
        s.add_argument(f"--{key}", help="value or range, e.g. 5..8")
    s.add_argument("--parts", help="part-size groups separated by ';', e.g. '2,2;1,2,2'")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LDHError, OSError) as exc:
        print(f"ldh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
