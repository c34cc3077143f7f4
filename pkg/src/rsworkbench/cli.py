"""Command-line interface.

Exit codes: 0 success, 1 the checked property is false, 2 error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, constructions, core, verify
from .core import Alphabet, ReactionSystemError
from .formats import (
    parse_set,
    parse_system,
    parse_table,
    render_set,
    render_system,
    render_table,
)

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _system(path: str, allow_reserved: bool = True) -> core.ReactionSystem:
    return parse_system(_read(path), allow_reserved=allow_reserved)


def _table(path: str, allow_reserved: bool = False) -> core.FunctionTable:
    return parse_table(_read(path), allow_reserved=allow_reserved)


def _domain(text: str) -> Alphabet:
    names = text.split()
    for name in names:
        core.check_user_symbol(name)
    return Alphabet(names)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_eval(args, out) -> int:
    system = _system(args.system)
    state = parse_set(args.state, system.inputs)
    print(render_set(core.result(system, state), system.outputs), file=out)
    return EXIT_OK


def cmd_trace(args, out) -> int:
    system = _system(args.system)
    state = parse_set(args.state, system.inputs)
    for x in core.trace(system, state, args.steps):
        print(render_set(x, system.inputs), file=out)
    return EXIT_OK


def cmd_tabulate(args, out) -> int:
    out.write(render_table(core.tabulate(_system(args.system))))
    return EXIT_OK


def cmd_classify(args, out) -> int:
    report = analysis.classify(_system(args.system))
    for key, value in report.as_dict().items():
        print(f"{key}: {_bool(value) if isinstance(value, bool) else value}", file=out)
    return EXIT_OK


def cmd_check_fn(args, out) -> int:
    f = _table(args.table, allow_reserved=True)
    union_ok, union_w = analysis.union_subadditive(f)
    inter_ok, inter_w = analysis.intersection_subadditive(f)
    print(f"union_subadditive: {_bool(union_ok)}", file=out)
    print(f"intersection_subadditive: {_bool(inter_ok)}", file=out)
    print(f"minimal_specifiable: {_bool(union_ok and inter_ok)}", file=out)
    for w in (union_w, inter_w):
        if w is not None:
            print(f"witness: {w.kind} X={render_set(w.x, f.domain)} "
                  f"Y={render_set(w.y, f.domain)} element={w.offending}", file=out)
    return EXIT_OK if union_ok and inter_ok else EXIT_FALSE


def _emit(text: str, path: str | None, out) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_construct(args, out) -> int:
    kind = args.kind
    if kind == "decompose":
        c, d = constructions.decompose(_system(args.source, allow_reserved=False))
        c_text = render_system(c, "encoder C")
        d_text = render_system(d, "decoder D")
        if args.out_c or args.out_d:
            _emit(c_text, args.out_c, out)
            _emit(d_text, args.out_d, out)
        else:
            out.write(c_text + "\n" + d_text)
        return EXIT_OK
    if kind in {"encoder", "strong-encoder"}:
        if not args.domain:
            raise ReactionSystemError(f"construct {kind} needs --domain")
        build = constructions.universal_encoder if kind == "encoder" else constructions.strong_encoder
        _emit(render_system(build(_domain(args.domain))), args.output, out)
        return EXIT_OK
    if args.source is None:
        raise ReactionSystemError(f"construct {kind} needs a TABLE argument")
    f = _table(args.source)
    if kind == "sim2":
        system = constructions.simulator2(f)
    elif kind == "strong2":
        system = constructions.strong_simulator2(f)
    else:
        if args.l is None or args.k is None:
            raise ReactionSystemError("construct strongk needs --l and --k")
        system = constructions.strong_simulator_k(f, args.l, args.k)
    _emit(render_system(system), args.output, out)
    return EXIT_OK


def cmd_verify_sim(args, out) -> int:
    f = _table(args.table, allow_reserved=True)
    system = _system(args.system)
    check = verify.check_strong_simulation if args.strong else verify.check_simulation
    report = check(f, system, args.k)
    print(f"holds: {_bool(report.holds)}", file=out)
    print(f"states_checked: {report.states_checked}", file=out)
    print(f"max_horizon: {report.max_horizon_used}", file=out)
    if not report.holds:
        print(f"failing_state: {render_set(report.failing_state, f.domain)}", file=out)
        print(f"failing_step: {report.failing_step}", file=out)
    return EXIT_OK if report.holds else EXIT_FALSE


def cmd_gen_chain(args, out) -> int:
    domain = _domain(args.domain)
    order = [parse_set(part, domain) for part in args.order.split(";")]
    out.write(render_table(constructions.chain_function(domain, order)))
    return EXIT_OK


def cmd_threshold(args, out) -> int:
    value = constructions.simulation_threshold(args.s, args.sprime)
    print(value, file=out)
    return EXIT_OK


def cmd_count_cores(args, out) -> int:
    count = verify.count_strictly_minimal_cores(args.size, enumerate_=args.enumerate)
    if args.enumerate:
        names = Alphabet(f"s{i}" for i in range(args.size))
        for r, i in verify.strictly_minimal_cores(args.size):
            print(f"{render_set(r, names)} | {render_set(i, names)}", file=out)
    print(count, file=out)
    return EXIT_OK


def cmd_count_systems(args, out) -> int:
    print(verify.count_strictly_minimal_systems(args.size, enumerate_=args.enumerate), file=out)
    return EXIT_OK


def cmd_nonsim(args, out) -> int:
    f = _table(args.table, allow_reserved=True)
    try:
        k_set = [int(k) for k in args.k_set.split(",") if k.strip()]
    except ValueError:
        raise ReactionSystemError(f"bad --k-set {args.k_set!r}") from None
    report = verify.exhaustive_nonsimulability(f, args.sprime_size, k_set)
    for k, witness in report.witnesses.items():
        print(f"k={k}: {'simulated' if witness is not None else 'none'}", file=out)
    return EXIT_OK if report.none_simulate else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsw", description="Reaction system workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="apply res once")
    p.add_argument("system")
    p.add_argument("state", help="space-separated symbols or '-'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("trace", help="print the state sequence")
    p.add_argument("system")
    p.add_argument("state")
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("tabulate", help="print the function table of a system")
    p.add_argument("system")
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("classify", help="structural predicates of a system")
    p.add_argument("system")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-fn", help="subadditivity and minimal specifiability")
    p.add_argument("table")
    p.set_defaults(func=cmd_check_fn)

    p = sub.add_parser("construct", help="build a simulating or decomposed system")
    p.add_argument("kind", choices=["decompose", "sim2", "strong2", "strongk",
                                    "encoder", "strong-encoder"])
    p.add_argument("source", nargs="?", help="SYSTEM for decompose, TABLE otherwise")
    p.add_argument("--domain")
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--out-c")
    p.add_argument("--out-d")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-sim", help="check (strong) k-simulation")
    p.add_argument("table")
    p.add_argument("system")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    p.set_defaults(func=cmd_verify_sim)

    p = sub.add_parser("gen-chain", help="chain function from a subset order")
    p.add_argument("--domain", required=True)
    p.add_argument("--order", required=True, help="semicolon-separated subsets")
    p.set_defaults(func=cmd_gen_chain)

    p = sub.add_parser("threshold", help="non-simulability threshold for chain functions")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--sprime", type=int, required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("count-cores", help="number of strictly minimal cores")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_count_cores)

    p = sub.add_parser("count-systems", help="number of strictly minimal systems")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_count_systems)

    p = sub.add_parser("nonsim", help="exhaustive search for any simulating function")
    p.add_argument("table")
    p.add_argument("--sprime-size", type=int, required=True)
    p.add_argument("--k-set", required=True)
    p.set_defaults(func=cmd_nonsim)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ReactionSystemError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
