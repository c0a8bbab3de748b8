"""Command-line front end: ``scrollcodes <command> ...``.

Every command rebuilds the code either from ``--spec FILE`` or from the
flags ``--field --exponents --points/--num-fibers --bases --seed``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from scrollcodes.code import BRUTE_FORCE_GUARD, GuardExceeded, encode, min_distance_bruteforce, \
    weight_hierarchy_bruteforce
from scrollcodes.decode import ErrorModel, decode, simulate_channel
from scrollcodes.extension import check_instability
from scrollcodes.formats import CodeSpecFile, FormatError, format_word, parse_word
from scrollcodes.gf import FieldError, FieldSpec


def _code_options(p: argparse.ArgumentParser):
    g = p.add_argument_group("code")
    g.add_argument("--spec", type=Path, help="code-spec file (overrides the flags below)")
    g.add_argument("--field", default="5", help='field descriptor, e.g. "5", "3^2", "2^2/1,1,1"')
    g.add_argument("--exponents", default="1,1", help="scroll type e_1,...,e_r (non-increasing)")
    g.add_argument("--points", help="comma-separated fiber points (default: all field elements)")
    g.add_argument("--num-fibers", type=int, help="use the first S field elements as fiber points")
    g.add_argument("--bases", choices=("identity", "random"), default="identity")
    g.add_argument("--seed", type=int, default=0)


def _load_spec(args) -> CodeSpecFile:
    if args.spec is not None:
        return CodeSpecFile.from_text(args.spec.read_text())
    field = FieldSpec.parse(args.field)
    exponents = tuple(int(e) for e in args.exponents.split(","))
    if args.points:
        points = tuple(field.parse_code(t) for t in args.points.split(","))
    else:
        s = field.q if args.num_fibers is None else args.num_fibers
        if not 1 <= s <= field.q:
            raise ValueError(f"--num-fibers must lie in 1..{field.q}")
        points = tuple(range(s))
    seed = args.seed if args.bases == "random" else None
    return CodeSpecFile.create(field, exponents, points, args.bases, seed)


def cmd_build(args) -> int:
    spec = _load_spec(args)
    code = spec.build()
    info = code.summary()
    print(f"n={info['n']} k={info['k']} radius={info['radius']} guarantee={info['guarantee']} "
          f"sags={'yes' if info['sags'] else 'no'}")
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "spec.txt").write_text(spec.to_text())
        (args.out / "G.txt").write_text(code.G.to_text())
        (args.out / "R.txt").write_text(code.R.to_text())
    return 0


def cmd_encode(args) -> int:
    code = _load_spec(args).build()
    msg = parse_word(code.field, args.message, code.k)
    print(format_word(code.field, encode(code, msg)))
    return 0


def cmd_decode(args) -> int:
    code = _load_spec(args).build()
    word = parse_word(code.field, args.word, code.n)
    res = decode(code, word, args.radius_override)
    if res.corrected is None:
        cands = ";".join(",".join(map(str, c)) for c in res.candidates) or "-"
        print(f"{res.status.value} candidates={cands} span_tests={res.span_tests}")
        return 0
    fibers = ",".join(map(str, res.fibers)) or "-"
    print(f"{res.status.value}, {res.weight} errors fibers={fibers} span_tests={res.span_tests}")
    print(format_word(code.field, res.corrected))
    return 0


def cmd_mindist(args) -> int:
    code = _load_spec(args).build()
    if args.hierarchy:
        d = weight_hierarchy_bruteforce(code, args.hierarchy, args.guard)
        print(f"d={d[0]}")
        print("hierarchy=" + ",".join(map(str, d)))
    else:
        print(f"d={min_distance_bruteforce(code, args.guard)}")
    return 0


def cmd_simulate(args) -> int:
    code = _load_spec(args).build()
    model = ErrorModel(args.fibers, args.per_fiber, args.seed)
    log = [] if args.log is not None else None
    stats = simulate_channel(code, args.trials, model, args.radius_override, log)
    print(stats.summary_line())
    if log is not None:
        args.log.write_text("\n".join(log) + "\n")
    return 0


def cmd_analyze(args) -> int:
    code = _load_spec(args).build()
    words = list(args.error or [])
    if args.errors_file is not None:
        words += [ln for ln in args.errors_file.read_text().splitlines() if ln.strip()]
    if not words:
        words = [format_word(code.field, np.zeros(code.n, dtype=np.int64))]
    for w in words:
        rep = check_instability(code, parse_word(code.field, w, code.n))
        print(rep.line())
    return 0


def cmd_selftest(args) -> int:
    from scrollcodes.selftest import run

    return 0 if run(print) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scrollcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build G and R and print the code parameters")
    _code_options(b)
    b.add_argument("--out", type=Path, help="directory for spec.txt, G.txt, R.txt")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("encode", help="encode a message of length k")
    _code_options(e)
    e.add_argument("--message", required=True)
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="two-step syndrome decoding of a received word")
    _code_options(d)
    d.add_argument("--word", required=True)
    d.add_argument("--radius-override", type=int, help="fiber search radius (default: correction radius)")
    d.set_defaults(func=cmd_decode)

    m = sub.add_parser("mindist", help="brute-force minimum distance")
    _code_options(m)
    m.add_argument("--hierarchy", type=int, default=0, help="also print d_1..d_N")
    m.add_argument("--guard", type=int, default=BRUTE_FORCE_GUARD)
    m.set_defaults(func=cmd_mindist)

    s = sub.add_parser("simulate", help="random-error channel simulation")
    _code_options(s)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--fibers", type=int, default=1, help="number of fibers carrying errors")
    s.add_argument("--per-fiber", type=int, help="nonzero positions per erroneous fiber")
    s.add_argument("--radius-override", type=int)
    s.add_argument("--log", type=Path, help="per-trial log file")
    s.set_defaults(func=cmd_simulate)

    a = sub.add_parser("analyze", help="splitting type and s1 report of error vectors")
    _code_options(a)
    a.add_argument("--error", action="append", help="error word (repeatable; default: zero)")
    a.add_argument("--errors-file", type=Path, help="file with one error word per line")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("selftest", help="fast acceptance checks")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FieldError, FormatError, GuardExceeded, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
