"""Command-line front door: compute, exact, census, bench, serve."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .exact import SizeCapExceeded, SlowExactSolver
from .graphs import CycleDetected, ParseError, parse_graph, validate_forest
from .isc import IscExactSolver, isc_cost
from .peel import random_forest_arrays, slow_cost, slow_cost_arrays, slow_cost_trace


def cmd_compute(args) -> int:
    try:
        text = open(args.path).read()
        g = parse_graph(text)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        f = validate_forest(g)
    except CycleDetected as e:
        print(
            f"error: input is not a forest ({e}); use `slowcolor exact` for general graphs",
            file=sys.stderr,
        )
        return 2
    s = slow_cost(f)
    isc = isc_cost(f)
    if args.json:
        out = {"n": f.n, "m": f.m, "s": s, "isc": isc}
        if args.trace:
            out["trace"] = slow_cost_trace(f).to_json()
        print(json.dumps(out, indent=2))
    else:
        print(f"s={s}")
        print(f"isc={isc}")
        if args.trace:
            print(slow_cost_trace(f).to_text())
    return 0


def cmd_exact(args) -> int:
    try:
        g = parse_graph(open(args.path).read())
    except (OSError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        if args.variant == "slow":
            solver = SlowExactSolver(g, cap=args.cap)
            value = solver.value()
            print(f"s={value}")
            if args.moves:
                for m in solver.lister_moves().connected:
                    print("optimal mark:", " ".join(map(str, sorted(m))))
        else:
            solver = IscExactSolver(g, cap=min(args.cap, 8))
            value = solver.value()
            print(f"isc={value}")
            if args.moves:
                from .isc import ListState

                for v in solver.optimal_requests(ListState(g)):
                    print("optimal request:", v)
    except SizeCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def cmd_census(args) -> int:
    from .extremal import census

    report = census(args.n)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
        print(f"wrote {args.out}")
    print(report.summary())
    return 0 if report.ok else 1


def cmd_bench(args) -> int:
    print(f"{'n':>10} {'build(s)':>9} {'eval(s)':>9} {'ns/vertex':>10} {'value':>12}")
    sizes = []
    n = 100_000
    while n <= args.max_n:
        sizes.append(n)
        n *= 2
    times = []
    for n in sizes:
        t0 = time.time()
        indptr, indices = random_forest_arrays(n, seed=args.seed)
        t1 = time.time()
        value = slow_cost_arrays(indptr, indices)
        t2 = time.time()
        times.append(t2 - t1)
        print(
            f"{n:>10} {t1 - t0:>9.2f} {t2 - t1:>9.2f} "
            f"{(t2 - t1) / n * 1e9:>10.1f} {value:>12}"
        )
    ok = True
    for a, b in zip(times, times[1:]):
        if b > 2.5 * max(a, 1e-3):
            ok = False
    if not ok:
        print("warning: doubling n grew wall time by more than 2.5x", file=sys.stderr)
        return 1
    print("near-linear growth confirmed (each doubling <= 2.5x)")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(persist_path=args.persist)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="slowcolor",
        description="Slow-coloring and interactive sum choice games on graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="forest costs via the linear-time peel")
    c.add_argument("path", help="edge-list file: header 'n m', then 'u v' lines")
    c.add_argument("--trace", action="store_true", help="print the peel certificate")
    c.add_argument("--json", action="store_true", help="machine-readable output")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("exact", help="exact game value on a small graph")
    e.add_argument("path")
    e.add_argument("--cap", type=int, default=12, help="vertex cap (hard max 20)")
    e.add_argument("--variant", choices=["slow", "isc"], default="slow")
    e.add_argument("--moves", action="store_true", help="also print optimal first moves")
    e.set_defaults(func=cmd_exact)

    s = sub.add_parser("census", help="verify extremal-tree characterizations")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", help="write the JSON report here")
    s.set_defaults(func=cmd_census)

    b = sub.add_parser("bench", help="time the linear evaluator on random forests")
    b.add_argument("--max-n", type=int, default=1_600_000)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("serve", help="run the interactive play service")
    v.add_argument("--port", type=int, default=8000)
    v.add_argument("--host", default="127.0.0.1")
    v.add_argument("--persist", help="append-only JSON-lines event log")
    v.set_defaults(func=cmd_serve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
