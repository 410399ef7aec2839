"""Command-line front end.

Subcommands: verify (suite runner), show (object printers), qbg export,
alcove list, ic, solve-system.  Exit code 0 means all checks passed, 1
means a check failed, 2 means a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import alcove, ichevalley, qbg, qkpres, relations, semimod, verify
from .rings import ConfigError
from .weylc import SignedPerm


def _json_dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_variant(text):
    """'3' means the upper variant at k=3, '3bar' the barred one."""
    if text is None:
        return "full", None
    body = text.strip()
    if body.endswith("bar"):
        return "barred", int(body[:-3])
    return "upper", int(body)


def _read_config(path):
    values = {}
    with open(path) as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError("bad config line: %r" % raw.strip())
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qkc",
        description="verify and inspect the quantum K-ring constructions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--trunc", type=_positive_int)
    p.add_argument("--mode", choices=("truncated", "exact"))
    p.add_argument("--suite",
                   help="suite name, comma-separated list, or 'all'")
    p.add_argument("--config")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("show", help="print an algebraic object")
    p.add_argument("what", choices=("f", "ff", "ideal", "schubert"))
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--variant")
    p.add_argument("--barred", action="store_true")
    p.add_argument("--trunc", type=_positive_int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("qbg", help="quantum Bruhat graph utilities")
    qsub = p.add_subparsers(dest="qbg_command", required=True)
    q = qsub.add_parser("export", help="export the full graph")
    q.add_argument("--n", type=_positive_int, required=True)
    q.add_argument("--format", choices=("dot", "json"), default="json")

    p = sub.add_parser("alcove", help="alcove-model utilities")
    asub = p.add_subparsers(dest="alcove_command", required=True)
    a = asub.add_parser("list", help="list admissible subsets")
    a.add_argument("--w", required=True, help='window notation, e.g. "[2,-1]"')
    a.add_argument("--seq", required=True, help="theta:K or gamma:K")
    a.add_argument("--json", action="store_true")

    p = sub.add_parser("ic", help="evaluate the inverse Chevalley formula")
    p.add_argument("--w", required=True, help='window notation, e.g. "[2,3,-1]"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve-system", help="solve the relation system")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_verify(args, parser):
    config = _read_config(args.config) if args.config else {}
    n = args.n if args.n is not None else int(config.get("n", 2))
    mode = args.mode or config.get("mode", "truncated")
    suite = args.suite or config.get("suites", "all")
    trunc = args.trunc
    if trunc is None and "trunc" in config:
        trunc = int(config["trunc"])
    if n < 1:
        parser.error("--n must be at least 1")
    if mode not in ("truncated", "exact"):
        parser.error("unknown mode %r" % mode)
    suites = "all" if suite == "all" else [s.strip() for s in suite.split(",")]
    if suites != "all":
        for name in suites:
            if name not in verify.SUITES:
                parser.error("unknown suite %r" % name)

    reports = verify.run_suites(suites, n, mode, trunc)
    ok = all(r.ok for r in reports)
    if args.json:
        command = "verify --n %d --mode %s --suite %s" % (n, mode, suite)
        payload = {
            "command": command,
            "status": "pass" if ok else "fail",
            "reports": [r.to_json(timings=args.timings) for r in reports],
        }
        sys.stdout.write(_json_dumps(payload))
    else:
        for r in reports:
            print(r.render(timings=args.timings))
        print("overall: %s" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def _laurent_json(p):
    return [{"z": list(exps), "coeff": c.render()}
            for exps, c in p.sorted_terms()]


def _cmd_show(args, parser):
    n = args.n
    if args.what in ("f", "ff"):
        if args.l is None:
            parser.error("show %s requires --l" % args.what)
        variant, k = _parse_variant(args.variant)
        if args.what == "f":
            obj = qkpres.f_poly(n, args.l, variant, k, args.trunc)
            if args.json:
                sys.stdout.write(_json_dumps(_laurent_json(obj)))
            else:
                print(obj.render())
            return 0
        obj = semimod.ff(n, args.l, variant, k, args.trunc)
        if args.json:
            triples = [{"w": w.render(), "lam": list(lam), "coeff": c.render()}
                       for (w, lam), c in obj.sorted_terms()]
            sys.stdout.write(_json_dumps(triples))
        else:
            print(obj.render())
        return 0
    if args.what == "ideal":
        gens = qkpres.ideal_generators(n, args.trunc)
        if args.json:
            sys.stdout.write(_json_dumps(
                [_laurent_json(g) for g in gens]))
        else:
            for l, g in enumerate(gens, start=1):
                print("F_%d - E_%d: %s" % (l, l, g.render()))
        return 0
    if args.k is None:
        parser.error("show schubert requires --k")
    variant = "barred" if args.barred else "upper"
    obj = qkpres.schubert_poly(n, args.k, variant, args.trunc)
    if args.json:
        sys.stdout.write(_json_dumps(_laurent_json(obj)))
    else:
        print(obj.render())
    return 0


def _cmd_alcove(args, parser):
    w = SignedPerm.parse(args.w)
    try:
        name, k_text = args.seq.split(":")
        k = int(k_text)
    except ValueError:
        parser.error("--seq must look like theta:2 or gamma:2")
    if name == "theta":
        seq = alcove.theta_seq(w.n, k)
    elif name == "gamma":
        seq = alcove.gamma_seq(w.n, k)
    else:
        parser.error("unknown sequence %r" % name)
    fam = alcove.admissible_subsets(w, seq)
    if args.json:
        payload = [{"positions": list(a.positions), "end": a.end.render(),
                    "down": list(a.down)} for a in fam]
        sys.stdout.write(_json_dumps(payload))
    else:
        for a in fam:
            print("%s  end=%s  down=(%s)" % (
                a.render(), a.end.render(),
                ",".join(str(x) for x in a.down)))
    return 0


def _cmd_ic(args):
    w = SignedPerm.parse(args.w)
    value = ichevalley.inverse_chevalley(w, args.m)
    if args.json:
        sys.stdout.write(_json_dumps(value.to_json()))
    else:
        print(value.render())
    return 0


def _cmd_solve(args):
    n = args.n
    solution = relations.solve_system(n)
    expected = tuple(relations.elementary_E(n, l) for l in range(n + 1))
    ok = solution == expected
    if args.json:
        payload = {
            "n": n,
            "status": "pass" if ok else "fail",
            "solution": [x.render() for x in solution],
        }
        sys.stdout.write(_json_dumps(payload))
    else:
        for l, x in enumerate(solution):
            mark = "PASS" if x == expected[l] else "FAIL"
            print("%s F_%d = %s" % (mark, l, x.render()))
    return 0 if ok else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "show":
            return _cmd_show(args, parser)
        if args.command == "qbg":
            edges = qbg.build_graph(args.n)
            sys.stdout.write(qbg.export(edges, args.format))
            return 0
        if args.command == "alcove":
            return _cmd_alcove(args, parser)
        if args.command == "ic":
            return _cmd_ic(args)
        return _cmd_solve(args)
    except ConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
