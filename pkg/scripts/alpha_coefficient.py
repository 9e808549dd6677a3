"""Compare the two candidate Phi_(k-2)(H_uv) coefficients of the A_alpha edge recursion.

Writes a CSV (graph, k, edge, alpha, derived_matches, alternative_matches,
phi_km2_uv_zero) to stdout for a sweep of alpha values.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from hookimm.families import complete_graph, cycle_graph, path_graph, star_graph
from hookimm.graphs import MatrixParams, build_H
from hookimm.oracle import hook_polys_bruteforce
from hookimm.recursion import EvalContext, phi_edge, phi_general
from hookimm.verify import alpha_printed_coeffs


@dataclass(frozen=True)
class Config:
    alphas: tuple = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), Fraction(1))
    max_n: int = 5


def run(cfg: Config) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["graph", "k", "edge", "alpha", "derived_matches", "alternative_matches",
                "phi_km2_uv_zero"])
    families = {"K": complete_graph, "P": path_graph, "C": cycle_graph, "S": star_graph}
    for alpha in cfg.alphas:
        p = MatrixParams.a_alpha(alpha)
        alt = alpha_printed_coeffs(alpha)
        for name, make in families.items():
            for n in range(3, cfg.max_n + 1):
                g = make(n)
                ctx = EvalContext(g, p)
                want = hook_polys_bruteforce(build_H(g, p))
                for k in range(1, n + 1):
                    for e in g.sorted_edges():
                        w.writerow([f"{name}{n}", k, f"{e[0] + 1}-{e[1] + 1}", str(alpha),
                                    phi_edge(ctx, e, k) == want[k],
                                    phi_edge(ctx, e, k, uv_coeffs=alt) == want[k],
                                    phi_general(ctx, e, k - 2).is_zero()])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--alpha", action="append", type=Fraction,
                    help="repeatable; defaults to a fixed sweep over [0, 1]")
    args = ap.parse_args()
    cfg = Config(max_n=args.max_n) if not args.alpha else Config(tuple(args.alpha), args.max_n)
    run(cfg)


if __name__ == "__main__":
    main()
