"""Batch front door: chi coefficients, cross-check batteries, Brion checks.

Reports are single-line JSON objects (or exponent,coefficient CSV rows with
--format csv).  Exit codes: 0 ok, 1 mathematical divergence, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import brion, formulas, oracle
from .battery import config_key, standard_battery
from .partitions import InvalidPitConfig, Partition, PitConfig

EXIT_OK = 0
EXIT_DIVERGENCE = 1
EXIT_USAGE = 2


def _partition_arg(text):
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _config_from_args(args):
    return PitConfig(args.n, args.m, nu=args.nu, mu=args.mu,
                     lam=args.lam).validate()


def _series_payload(series, order):
    low = series.low if series.coeffs else 0
    return {
        "low": low,
        "coeffs": [series.coefficient(k) for k in range(low, order + 1)],
    }


def _emit(report, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        low = report.get("low", 0)
        for off, c in enumerate(report.get("coeffs", [])):
            stream.write("%d,%d\n" % (low + off, c))


def _config_echo(config):
    return {
        "n": config.n,
        "m": config.m,
        "nu": list(config.nu.parts),
        "mu": list(config.mu.parts),
        "lambda": list(config.lam.parts),
    }


def cmd_chi(args):
    config = _config_from_args(args)
    t0 = time.perf_counter()
    series = formulas.chi(config, args.order, method=args.method)
    elapsed = time.perf_counter() - t0
    report = {"config": _config_echo(config), "method": args.method,
              "order": args.order, "elapsed_s": round(elapsed, 6)}
    report.update(_series_payload(series, args.order))
    _emit(report, args.format)
    return EXIT_OK


def _run_one(job):
    key, order, methods = job
    n, m, nu, mu, lam = key
    config = PitConfig(n, m, nu=nu, mu=mu, lam=lam)
    results = {meth: formulas.chi(config, order, method=meth)
               for meth in methods}
    verdicts = []
    divergence = None
    names = list(methods)
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            sa, sb = results[names[a]], results[names[b]]
            agree = sa == sb
            entry = {"pair": [names[a], names[b]], "agree": agree}
            if not agree:
                first = next(k for k in range(0, order + 1)
                             if sa.coefficient(k) != sb.coefficient(k))
                entry["first_divergence"] = first
                divergence = entry
            verdicts.append(entry)
    payload = _series_payload(results[names[0]], order)
    return key, verdicts, divergence, payload


def cmd_crosscheck(args):
    if not args.force and (args.max_n > 2 or args.max_m > 2 or
                           args.max_part > 3 or args.order > 10):
        print("battery exceeds the desk-scale guard rails; pass --force",
              file=sys.stderr)
        return EXIT_USAGE
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for meth in methods:
        if meth not in formulas.METHODS:
            print("unknown method %r" % meth, file=sys.stderr)
            return EXIT_USAGE
    if "wall" in methods:
        print("wall applies only to m = 0; use chi --method wall",
              file=sys.stderr)
        return EXIT_USAGE
    configs = standard_battery(args.max_n, args.max_m, args.max_part)
    jobs = [((c.n, c.m, c.nu.parts, c.mu.parts, c.lam.parts),
             args.order, tuple(methods)) for c in configs]
    t0 = time.perf_counter()
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    results.sort(key=lambda item: item[0])
    failures = []
    for key, verdicts, divergence, _ in results:
        if divergence is not None:
            failures.append({"config": key, "divergence": divergence})
    report = {
        "battery": {"max_n": args.max_n, "max_m": args.max_m,
                    "max_part": args.max_part, "order": args.order},
        "methods": methods,
        "configs_checked": len(results),
        "all_agree": not failures,
        "failures": failures[:10],
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    _emit(report, "json")
    if failures:
        worst = failures[0]
        print("first divergence at config %r" % (worst["config"],),
              file=sys.stderr)
        return EXIT_DIVERGENCE
    return EXIT_OK


def cmd_brion_check(args):
    config = _config_from_args(args)
    H, Hp = args.H, args.Hp
    order = brion.sq_min_weight(config, H, Hp) + args.order
    t0 = time.perf_counter()
    direct = brion.sq_direct(config, H, Hp, order)
    checks = []
    ok = True
    if config.m == 0:
        vs = brion.vertex_sum_m0(config.n, config.nu, config.lam, H, order)
        checks.append({"check": "vertex_sum_m0", "agree": vs == direct})
    else:
        vs = brion.vertex_sum_general(config, H, Hp, order)
        checks.append({"check": "vertex_sum_general", "agree": vs == direct})
        res = brion.order_independence_check(config, H, Hp, order)
        entry = {"check": "order_independence", "window_ok": res.window_ok,
                 "agree": res.equal}
        if res.window_ok and not res.equal:
            ok = False
        checks.append(entry)
    ok = ok and all(c["agree"] for c in checks if "window_ok" not in c)
    report = {
        "config": _config_echo(config), "H": H, "Hp": Hp,
        "order": args.order, "min_weight": order - args.order,
        "checks": checks, "ok": ok,
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report, "json")
    return EXIT_OK if ok else EXIT_DIVERGENCE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pitgf",
        description="Generating functions of plane partitions with a pit")
    sub = parser.add_subparsers(dest="command", required=True)

    default_jobs = int(os.environ.get("PITGF_JOBS", "1"))

    chi_p = sub.add_parser("chi", help="compute chi by one method")
    chi_p.add_argument("--n", type=int, required=True)
    chi_p.add_argument("--m", type=int, required=True)
    chi_p.add_argument("--nu", type=_partition_arg, default=Partition(()))
    chi_p.add_argument("--mu", type=_partition_arg, default=Partition(()))
    chi_p.add_argument("--lambda", dest="lam", type=_partition_arg,
                       default=Partition(()))
    chi_p.add_argument("--order", type=int, default=8)
    chi_p.add_argument("--method", choices=formulas.METHODS, default="det")
    chi_p.add_argument("--format", choices=("json", "csv"), default="json")
    chi_p.set_defaults(func=cmd_chi)

    cc = sub.add_parser("crosscheck", help="battery of pairwise comparisons")
    cc.add_argument("--max-n", dest="max_n", type=int, default=2)
    cc.add_argument("--max-m", dest="max_m", type=int, default=2)
    cc.add_argument("--max-part", dest="max_part", type=int, default=3)
    cc.add_argument("--order", type=int, default=8)
    cc.add_argument("--methods", default="det,bos,explicit,oracle")
    cc.add_argument("--jobs", type=int, default=default_jobs)
    cc.add_argument("--force", action="store_true")
    cc.set_defaults(func=cmd_crosscheck)

    bc = sub.add_parser("brion-check",
                        help="vertex sums vs direct lattice-point enumeration")
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--m", type=int, required=True)
    bc.add_argument("--nu", type=_partition_arg, default=Partition(()))
    bc.add_argument("--mu", type=_partition_arg, default=Partition(()))
    bc.add_argument("--lambda", dest="lam", type=_partition_arg,
                    default=Partition(()))
    bc.add_argument("--H", type=int, required=True)
    bc.add_argument("--Hp", type=int, default=None)
    bc.add_argument("--order", type=int, default=8)
    bc.set_defaults(func=cmd_brion_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "Hp", None) is None and args.command == "brion-check":
        args.Hp = args.H
    try:
        return args.func(args)
    except (InvalidPitConfig, brion.BrionPreconditionError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
