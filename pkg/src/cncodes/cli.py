"""Command-line entry point: ``cncodes <subcommand> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, constructions, io
from .boolean import is_bent, parse_anf, parse_truth_table_hex, support, walsh
from .errors import CNCodeError
from .metric import profile
from .ratio import check_r, format_plain, format_ratio, parse_ratio


def _ratio_arg(text: str):
    try:
        return check_r(parse_ratio(text))
    except CNCodeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _epsilon_arg(text: str) -> int:
    if text in ("1", "+1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError("epsilon must be +1 or -1")


def _add_construction_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="number of variables (even)")
    p.add_argument("--t", type=int, help="Hadamard order exponent: matrix of order 2^t")
    p.add_argument("--anf", help="bent function in algebraic normal form, e.g. 'x1*x2+x3*x4'")
    p.add_argument("--epsilon", type=_epsilon_arg, help="sign of the default bent function (+1 or -1)")
    p.add_argument("--puncture", type=int, choices=(0, 1), help="bent-translate only: keep words starting with this bit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cncodes", description="Combinatorial neural codes under the asymmetric discrepancy.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write it with metadata")
    p.add_argument("kind", choices=sorted(constructions.ALIASES))
    _add_construction_options(p)
    p.add_argument("-o", "--output", required=True, help="code file to write")
    p.add_argument("--meta", help="metadata JSON path (default: OUTPUT.json)")
    p.add_argument("--r", type=_ratio_arg, action="append", default=[], help="also verify at this r (repeatable)")

    p = sub.add_parser("analyze", help="length, size, distances and discrepancies of a code file")
    p.add_argument("file")
    p.add_argument("--r", type=_ratio_arg, action="append", default=[], help="r as a/b or integer (repeatable)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="Singleton/Hamming/Plotkin status and optimality verdicts")
    p.add_argument("file")
    p.add_argument("--r", type=_ratio_arg, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("walsh", help="Walsh spectrum and bentness of a boolean function")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--anf")
    src.add_argument("--tt", help="truth table as 'm=<int>;tt=<hex>'")
    p.add_argument("--m", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="brute-force check of a construction's predicted parameters")
    p.add_argument("construction", choices=sorted(constructions.ALIASES))
    _add_construction_options(p)
    p.add_argument("--r", type=_ratio_arg, action="append", default=[])

    p = sub.add_parser("channel-r", help="r from the channel crossover probabilities")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    return parser


def _construction_kwargs(args) -> dict:
    return {"m": args.m, "t": args.t, "anf": args.anf, "epsilon": args.epsilon, "puncture": args.puncture}


def cmd_construct(args, out) -> int:
    built = constructions.build(args.kind, **_construction_kwargs(args))
    meta = constructions.metadata(built)
    if args.r:
        meta["verified"] = constructions.verify_built(built, args.r).to_dict()["verified"]
    comments = [f"construction={built.construction} m={built.m} n={built.code.n} K={built.code.K}"]
    io.write_code(args.output, built.code, comments)
    meta_path = Path(args.meta) if args.meta else Path(str(args.output) + ".json")
    meta_path.write_text(io.dumps(meta), encoding="utf-8")
    print(f"wrote {args.output} (n={built.code.n}, K={built.code.K}) and {meta_path}", file=out)
    return 0


def cmd_analyze(args, out) -> int:
    code = io.read_code(args.file)
    rs = args.r or [check_r(1)]
    prof = profile(code)
    values = {r: prof.evaluate(r) for r in rs}
    if args.json:
        payload = {
            "n": code.n,
            "K": code.K,
            "d_H": prof.min_hamming(),
            "profile": [
                {"d10": p.d10, "d01": p.d01, "witness": list(w)} for p, w in zip(prof.points, prof.witnesses)
            ],
            "delta_r": {format_ratio(r): {"value": format_ratio(v), "witness": list(w)} for r, (v, w) in values.items()},
        }
        out.write(io.dumps(payload))
        return 0
    print(f"n = {code.n}", file=out)
    print(f"K = {code.K}", file=out)
    print(f"d_H = {prof.min_hamming()}", file=out)
    print("profile = " + " ".join(f"({p.d10},{p.d01})" for p in prof.points), file=out)
    for r, (v, w) in values.items():
        print(f"delta_{format_plain(r)} = {format_plain(v)}  witness {w}", file=out)
    return 0


def cmd_bounds(args, out) -> int:
    code = io.read_code(args.file)
    report = bounds.classify_optimality(code, args.r)
    if args.json:
        out.write(io.dumps(report.to_dict()))
        return 0
    print(f"n = {report.n}  K = {report.K}  d_H = {report.d_H}  r = {format_plain(report.r)}  "
          f"delta_r = {format_plain(report.delta_r)}", file=out)
    for kind, v in report.verdicts.items():
        st = v.delta_bound
        if st.applicable:
            print(f"{kind:9s} K <= {format_plain(st.rhs)}  holds={st.holds}  meets={st.meets}  "
                  f"slack={format_plain(st.slack)}", file=out)
        else:
            print(f"{kind:9s} not applicable (2d <= n with d = {st.parameter})", file=out)
        thr = "-" if v.r_threshold is None else format_plain(v.r_threshold)
        print(f"{'':9s} reaches for d_H={v.reaches_for_dH}  for delta_r={v.reaches_for_delta_r}  "
              f"criterion={v.characterization}  agree={v.agree}  r threshold={thr}", file=out)
    return 0


def cmd_walsh(args, out) -> int:
    if args.anf is not None:
        if args.m is None:
            raise CNCodeError("--anf needs --m")
        f = parse_anf(args.anf, args.m)
    else:
        f = parse_truth_table_hex(args.tt)
    spectrum = walsh(f)
    bent, eps = is_bent(f)
    size = len(support(f))
    if args.json:
        payload = {
            "m": f.m,
            "spectrum": [int(v) for v in spectrum.values],
            "bent": bent,
            "epsilon": eps,
            "support_size": size,
            "parseval": spectrum.parseval_holds(),
        }
        out.write(io.dumps(payload))
        return 0
    print("spectrum = " + " ".join(str(int(v)) for v in spectrum.values), file=out)
    print(f"bent = {'yes' if bent else 'no'}", file=out)
    print(f"epsilon = {'-' if eps is None else f'{eps:+d}'}", file=out)
    print(f"support_size = {size}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    rs = args.r or [check_r(1)]
    report = constructions.verify(args.construction, rs, **_construction_kwargs(args))
    out.write(io.dumps(report.to_dict()))
    return 0


def cmd_channel_r(args, out) -> int:
    r = bounds.channel_r(p=args.p, q=args.q)
    print(f"{r:.12f}", file=out)
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "bounds": cmd_bounds,
    "walsh": cmd_walsh,
    "verify": cmd_verify,
    "channel-r": cmd_channel_r,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (CNCodeError, OSError) as exc:
        print(f"cncodes: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
