"""Run the property suites at acceptance scale and write one JSON report each.

    python3 scripts/run_suites.py --out reports
    python3 scripts/run_suites.py --only join alphi
"""

from __future__ import annotations

import argparse
import os
import time

from edgecolor import suites

PLAN = {
    "exhaustive": dict(max_n=5, max_mult=2, ks=(1, 2, 3, 4), theorems=("simple", "main"),
                       kostochka=True),
    "random": dict(seed=7, trials=500, max_n=8, max_mult=3, max_k=5, theorems=("main",)),
    "colorers": dict(seed=11, trials=300, max_n=8, max_mult=3),
    "forest": dict(seed=13, trials=400, max_n=8, max_mult=3),
    "join": dict(max_h=6, ks=(1, 2, 3)),
    "alphi": dict(seed=17, trials=200, max_n=10, max_k=3),
    "val": dict(max_n=6),
    "conjecture": dict(max_n=7, ks=(1, 2)),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    ap.add_argument("--only", nargs="*", choices=sorted(PLAN))
    ap.add_argument("--workers", type=int, default=1, help="exhaustive suite only")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    failed = 0
    for name in args.only or PLAN:
        kw = dict(PLAN[name])
        if name == "exhaustive":
            kw["workers"] = args.workers
        t = time.perf_counter()
        rep = suites.RUNNERS[name](**kw)
        took = time.perf_counter() - t
        with open(os.path.join(args.out, f"{name}.json"), "w") as fh:
            fh.write(rep.to_json() + "\n")
        print(f"{rep.summary()}  ({took:.1f}s)")
        if "headline" in rep.notes:
            print("   ", rep.notes["headline"])
        failed += rep.failed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
