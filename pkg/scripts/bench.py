"""Oracle vs memoised recursion timings on a graph family, as CSV."""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys
import time
from dataclasses import dataclass

from hookimm.families import complete_graph, cycle_graph, path_graph, random_graph
from hookimm.graphs import MatrixParams, build_H
from hookimm.oracle import hook_polys_bruteforce
from hookimm.recursion import EvalContext, phi_general


@dataclass(frozen=True)
class Config:
    family: str = "complete"
    min_n: int = 3
    max_n: int = 8
    repeats: int = 1
    seed: int = 0
    oracle_max_n: int = 9


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    make = {"complete": complete_graph, "path": path_graph, "cycle": cycle_graph,
            "random": lambda n: random_graph(n, rng)}[cfg.family]
    p = MatrixParams.laplacian()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["family", "n", "k", "method", "milliseconds"])
    for n in range(cfg.min_n, cfg.max_n + 1):
        g = make(n)
        k = math.ceil(n / 2)
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            got = phi_general(EvalContext(g, p), (), k)
            w.writerow([cfg.family, n, k, "recursion", f"{(time.perf_counter() - t0) * 1e3:.2f}"])
            if n <= cfg.oracle_max_n:
                t0 = time.perf_counter()
                want = hook_polys_bruteforce(build_H(g, p))[k]
                w.writerow([cfg.family, n, k, "oracle", f"{(time.perf_counter() - t0) * 1e3:.2f}"])
                if want != got:
                    raise SystemExit(f"mismatch at n={n}")
            sys.stdout.flush()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
