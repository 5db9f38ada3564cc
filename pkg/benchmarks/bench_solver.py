"""Compare the numba kernel against the pure-Python fallback.

Each path runs in its own interpreter, because MBDOM_DISABLE_JIT is read at
import time. Both paths must produce identical values; the script exits 1
otherwise.

    python3 benchmarks/bench_solver.py --repeat 3
"""

import argparse
import json
import os
import statistics
import subprocess
import sys

WORKLOADS = {
    "census6": {"kind": "census", "n": 6},
    "critical": {"kind": "critical", "specs": ["F:3,3,4", "Fprime:3,4,5", "B:4,5"]},
    "random14": {"kind": "random", "n": 14, "p": 0.3, "count": 20, "seed": 7},
}

WORKER = r"""
import json, sys, time
t0 = time.perf_counter()
from mbdom import _jit
from mbdom.canon import enumerate_connected
from mbdom.families import build, parse_spec
from mbdom.criticality import is_critical
from mbdom.graph import from_edges
from mbdom.solver import Player, Solver
import random
Solver(build(parse_spec("H:2"))).game_value()
t1 = time.perf_counter()
w = json.loads(sys.argv[1])
values = []
if w["kind"] == "critical":
    for spec in w["specs"]:
        values.append(str(is_critical(build(parse_spec(spec)))))
else:
    if w["kind"] == "census":
        graphs = list(enumerate_connected(w["n"]))
    else:
        rng = random.Random(w["seed"])
        n = w["n"]
        graphs = [from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                 if rng.random() < w["p"]]) for _ in range(w["count"])]
    for G in graphs:
        s = Solver(G)
        for first in (Player.DOMINATOR, Player.STALLER):
            values.append(str(s.game_value(0, first)))
t2 = time.perf_counter()
print(json.dumps({"jit": _jit.USE_NUMBA, "startup": t1 - t0, "solve": t2 - t1, "values": values}))
"""


def run(workload, disable_jit):
    env = dict(os.environ, MBDOM_DISABLE_JIT="1" if disable_jit else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, json.dumps(WORKLOADS[workload])],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workload", choices=sorted(WORKLOADS), action="append")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    status = 0
    print(f"{'workload':<10} {'path':<7} {'startup s':>10} {'solve s':>10}")
    for workload in args.workload or sorted(WORKLOADS):
        results = {}
        for disable in (False, True):
            runs = [run(workload, disable) for _ in range(args.repeat)]
            label = "python" if disable else "numba"
            results[label] = runs
            print(f"{workload:<10} {label:<7} {statistics.median(r['startup'] for r in runs):>10.3f} "
                  f"{statistics.median(r['solve'] for r in runs):>10.3f}")
        fast = statistics.median(r["solve"] for r in results["numba"])
        slow = statistics.median(r["solve"] for r in results["python"])
        print(f"{workload:<10} speedup {slow / fast:.1f}x")
        if results["numba"][0]["values"] != results["python"][0]["values"]:
            print(f"{workload}: values differ between paths")
            status = 1
    return status


if __name__ == "__main__":
    raise SystemExit(main())
