"""Benchmark the search kernels on both execution paths.

The kernels in kernels.py run jit-compiled when numba is available and the
environment variable VSTAB_NUMBA is not 0/off/false/no, and as plain
interpreted numpy otherwise. `python -m vstab.bench` spawns one child per
path (so each process imports the kernels in a single mode), times a fixed
workload set in each, and prints a comparison table. Workload timings are
best-of-N after one uncounted warmup run, so jit compilation time is not
charged to the jit path.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from ._accel import HAVE_NUMBA, JIT_ENABLED
from . import kernels
from .constructions import construct_constr1, construct_prop31
from .graph import active_words
from .invariants import greedy_clique_partition
from .sat import gen_unsat_family, is_satisfiable


def _kcolor_workload(g, k, loops):
    words = g.words()
    act = active_words(g.n, g.full_mask())
    _, part_start, part_vert = greedy_clique_partition(g)
    out = np.zeros(g.n, dtype=np.int64)

    def run():
        total = 0
        for _ in range(loops):
            status, nodes = kernels.kcolor_search(
                words, act, k, part_start, part_vert, 10**9, out
            )
            assert status >= 0
            total += int(nodes)
        return total

    return run


def _clique_workload(g, loops):
    words = g.words()
    act = active_words(g.n, g.full_mask())
    out = np.zeros(g.n + 1, dtype=np.int64)

    def run():
        total = 0
        for _ in range(loops):
            status, omega, nodes = kernels.max_clique_search(words, act, 10**9, out)
            assert status >= 0
            total += int(nodes)
        return total

    return run


def _sat_workload(m):
    inst = gen_unsat_family(m)

    def run():
        assert is_satisfiable(inst) is None
        return 2**inst.variable_count

    return run


def build_workloads():
    g7, _ = construct_prop31(7)
    gd6, _ = construct_constr1(6)
    return [
        ("kcolor refute x200 (n=%d, k=6)" % g7.n, _kcolor_workload(g7, 6, 200)),
        ("kcolor accept x200 (n=%d, k=7)" % g7.n, _kcolor_workload(g7, 7, 200)),
        ("max clique x500 (n=%d)" % gd6.n, _clique_workload(gd6, 500)),
        ("sat scan (15 vars)", _sat_workload(8)),
    ]


def run_workloads(repeat):
    results = []
    for name, run in build_workloads():
        work = run()  # warmup; first jit call compiles here
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            run()
            elapsed = time.perf_counter() - t0
            best = elapsed if best is None else min(best, elapsed)
        results.append({"name": name, "ms": best * 1000.0, "work": work})
    return results


def _child(mode, repeat):
    env = dict(os.environ, VSTAB_NUMBA="1" if mode == "jit" else "0")
    proc = subprocess.run(
        [sys.executable, "-m", "vstab.bench", "--run", "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per workload")
    parser.add_argument("--run", action="store_true",
                        help="run workloads in-process and emit JSON (child mode)")
    args = parser.parse_args(argv)

    if args.run:
        mode = "jit" if JIT_ENABLED else "interpreted"
        payload = {"mode": mode, "results": run_workloads(args.repeat)}
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
        return 0

    if not HAVE_NUMBA:
        print("numba not installed; timing the interpreted path only")
        for entry in run_workloads(args.repeat):
            print(f"{entry['name']:34s} {entry['ms']:10.3f} ms  (work={entry['work']})")
        return 0

    jit = _child("jit", args.repeat)
    interp = _child("interp", args.repeat)
    print(f"{'workload':34s} {'jit ms':>10s} {'interp ms':>12s} {'speedup':>9s}")
    for a, b in zip(jit["results"], interp["results"]):
        assert a["name"] == b["name"] and a["work"] == b["work"]
        speed = b["ms"] / a["ms"] if a["ms"] > 0 else float("inf")
        print(f"{a['name']:34s} {a['ms']:10.3f} {b['ms']:12.3f} {speed:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
