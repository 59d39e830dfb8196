"""Command-line entry point.

Exit codes: 0 on success or when every checked claim (or validation) passes,
1 when a claim is falsified or a validation fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import lcm
from pathlib import Path

from .core import Family, SVNSet, Universe, intersection
from .errors import SVNError
from .expr import evaluate
from .filters import (
    adjoin,
    contains,
    is_filter_base,
    join,
    meet,
    mk_filter,
    star_closure,
)
from .lattice import (
    GradeLattice,
    dichotomy_holds,
    enumerate_points,
    explicit_family,
    extend_to_ultrafilter,
    is_filter_in_lattice,
    is_ultrafilter_in_lattice,
    upward_closure,
)
from .tables import render_set, set_rows
from .verifier import SearchConfig, get_claim, load_expectations, run_suite
from .verifier.engine import BOTH
from .workspace import Workspace, load_workspace

OK, FAILED, INPUT_ERROR = 0, 1, 2


def _print_family(fam, names: dict | None = None):
    for i, m in enumerate(fam, 1):
        label = (names or {}).get(m, f"#{i}")
        print(render_set(m, label))
        print()


def _rev_names(ws: Workspace) -> dict[SVNSet, str]:
    out = {}
    for name, a in ws.sets.items():
        out.setdefault(a, name)
    return out


def cmd_eval(args) -> int:
    ws = load_workspace(args.workspace)
    result = evaluate(ws, args.expression)
    if isinstance(result, bool):
        print("true" if result else "false")
    else:
        print(render_set(result, args.expression))
    return OK


def cmd_render(args) -> int:
    ws = load_workspace(args.workspace)
    names = args.names or list(ws.sets)
    for i, name in enumerate(names):
        if i:
            print()
        print(render_set(ws.set(name), name))
    return OK


def _base_reasons(fam: Family, names) -> list[str]:
    reasons = []
    members = fam.members
    for m in members:
        if m.is_empty():
            reasons.append(f"{names.get(m, '?')} is the empty set")
    for i, f in enumerate(members):
        for g in members[i + 1:]:
            fg = f & g
            if not any(h <= fg for h in members):
                reasons.append(f"no member lies below {names.get(f, '?')} ⊓ {names.get(g, '?')}")
    return reasons


def cmd_check_base(args) -> int:
    ws = load_workspace(args.workspace)
    fam = ws.base(args.base)
    ok = is_filter_base(fam)
    print(f"{args.base}: {'filter base' if ok else 'not a filter base'}")
    for r in _base_reasons(fam, _rev_names(ws)):
        print(f"  - {r}")
    return OK if ok else FAILED


def _lattice_for(sets, k):
    if k is None:
        k = lcm(*(s.denominator for s in sets))
    return GradeLattice(k)


def cmd_check_filter(args) -> int:
    ws = load_workspace(args.workspace)
    fam = ws.base(args.base)
    lattice = _lattice_for(fam, args.k)
    explicit = explicit_family(fam, ws.universe, lattice, args.budget)
    ok = is_filter_in_lattice(explicit)
    print(f"{args.base}: {'filter' if ok else 'not a filter'} in the grade lattice with k={lattice.k}")
    names = _rev_names(ws)
    members = fam.members
    if not ok:
        if any(m.is_empty() for m in members):
            print("  - contains the empty set")
        for i, f in enumerate(members):
            for g in members[i + 1:]:
                if (f & g) not in fam:
                    print(f"  - {names.get(f, '?')} ⊓ {names.get(g, '?')} is missing")
        closure = upward_closure(members, ws.universe, lattice, args.budget)
        missing = len(closure) - len(explicit)
        if missing:
            print(f"  - not upward closed: {missing} lattice points above members are missing")
    return OK if ok else FAILED


def cmd_filter_op(args) -> int:
    ws = load_workspace(args.workspace)
    base = ws.base(args.base)
    names = _rev_names(ws)
    if args.op == "star":
        _print_family(star_closure(base), names)
        return OK
    if args.other is None:
        raise SVNError(f"filter-op {args.op} needs a second operand")
    if args.op in ("meet", "join"):
        other = ws.base(args.other)
        _print_family((meet if args.op == "meet" else join)(base, other), names)
        return OK
    a = ws.set(args.other)
    if args.op == "adjoin":
        _print_family(adjoin(base, a), names)
        return OK
    ok = contains(mk_filter(base), a)
    print("true" if ok else "false")
    return OK


def cmd_lattice(args) -> int:
    if args.action == "enumerate":
        universe = Universe(f"u{i}" for i in range(1, args.n + 1))
        for i, p in enumerate(enumerate_points(universe, GradeLattice(args.k), args.budget)):
            print(f"#{i}: " + "; ".join(f"{u}=({', '.join(c)})" for u, c in set_rows(p).items()))
        return OK
    if args.workspace is None or args.set is None:
        raise SVNError(f"lattice {args.action} needs a workspace and a set name")
    ws = load_workspace(args.workspace)
    a = ws.set(args.set)
    lattice = _lattice_for([a], args.k)
    principal = upward_closure([a], a.universe, lattice, args.budget)
    if not is_filter_in_lattice(principal):
        raise SVNError(f"{args.set} generates no filter (it is the empty set)")
    if args.action == "ultrafilter":
        ok = is_ultrafilter_in_lattice(principal)
        print(f"↑{args.set} is {'an ultrafilter' if ok else 'not an ultrafilter'} in the grade lattice with k={lattice.k}")
        print(f"dichotomy: {'holds' if dichotomy_holds(principal) else 'fails'}")
        return OK
    ultra = extend_to_ultrafilter(principal)
    gen = intersection(list(ultra))
    print(f"extended ↑{args.set} to an ultrafilter of {len(ultra)} points generated by:")
    print(render_set(gen))
    return OK


def cmd_verify(args) -> int:
    cfg = SearchConfig(
        universe_sizes=tuple(range(1, args.umax + 1)),
        granularities=tuple(range(1, args.kmax + 1)),
        random_samples=args.samples,
        seed=args.seed,
        convention=args.convention,
    )
    for tag in args.tags:
        get_claim(tag)
    report = run_suite(cfg, tags=args.tags or None)
    text = report.to_jsonl() if args.format == "jsonl" else report.to_table()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.write_expectations:
        doc = {"config": _config_doc(cfg), "statuses": dict(sorted(report.statuses().items()))}
        Path(args.write_expectations).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    if args.check_expectations:
        expected = load_expectations()
        drift = {k: (expected.get(k), s) for k, s in report.statuses().items() if expected.get(k) != s}
        for k, (was, now) in sorted(drift.items()):
            print(f"expectation drift: {k}: expected {was}, got {now}", file=sys.stderr)
        if drift:
            return FAILED
        return OK
    return FAILED if report.any_falsified else OK


def _config_doc(cfg: SearchConfig) -> dict:
    return {
        "universe_sizes": list(cfg.universe_sizes),
        "granularities": list(cfg.granularities),
        "random_samples": cfg.random_samples,
        "seed": cfg.seed,
        "convention": cfg.convention,
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="svnfilter", description="Single valued neutrosophic sets, filters and a claim verifier.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate an expression against a workspace")
    s.add_argument("workspace")
    s.add_argument("expression")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("render", help="print named sets as mu/sigma/nu tables")
    s.add_argument("workspace")
    s.add_argument("names", nargs="*")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("check-base", help="is a named family a filter base?")
    s.add_argument("workspace")
    s.add_argument("base")
    s.set_defaults(func=cmd_check_base)

    s = sub.add_parser("check-filter", help="is a named family a filter inside a grade lattice?")
    s.add_argument("workspace")
    s.add_argument("base")
    s.add_argument("--k", type=int, default=None, help="granularity (default: lcm of grade denominators)")
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_check_filter)

    s = sub.add_parser("filter-op", help="meet, join, adjoin, star closure or completion membership")
    s.add_argument("workspace")
    s.add_argument("op", choices=["meet", "join", "adjoin", "star", "contains"])
    s.add_argument("base")
    s.add_argument("other", nargs="?", help="second base (meet/join) or set (adjoin/contains)")
    s.set_defaults(func=cmd_filter_op)

    s = sub.add_parser("lattice", help="enumerate a grade lattice, test or extend a principal ultrafilter")
    s.add_argument("action", choices=["enumerate", "ultrafilter", "extend"])
    s.add_argument("workspace", nargs="?")
    s.add_argument("set", nargs="?")
    s.add_argument("--n", type=int, default=1, help="universe size for enumerate")
    s.add_argument("--k", type=int, default=None, help="granularity (enumerate default: 1)")
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("verify", help="check one or more claims, or the whole registry")
    s.add_argument("tags", nargs="*")
    s.add_argument("--umax", type=int, default=2)
    s.add_argument("--kmax", type=int, default=2)
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--convention", choices=["paper-inf", "standard-sup", BOTH], default=BOTH)
    s.add_argument("--format", choices=["table", "jsonl"], default="table")
    s.add_argument("--output", help="write the report here instead of stdout")
    s.add_argument("--write-expectations", metavar="PATH", help="also write the statuses as an expectations file")
    s.add_argument("--check-expectations", action="store_true",
                   help="exit 1 iff some status differs from the shipped expectations")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lattice" and args.action == "enumerate" and args.k is None:
        args.k = 1
    try:
        return args.func(args)
    except (SVNError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
