"""Colour counts of the ternary lower-bound graphs G_k at clustering c,
next to the 2k-2 lower bound."""

import argparse

from clustercol.colouring import optimal_cluster_colouring
from clustercol.config import BudgetExceeded
from clustercol.generators import closure_tree, ternary_lower_bound
from clustercol.minors import has_minor


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", default="2:1,2:2,2:3,3:1,3:2")
    args = ap.parse_args()

    print(f"{'k':>2s} {'c':>2s} {'n':>4s} {'colours':>8s} {'2k-2':>5s} {'C(k,3) minor':>13s}")
    for item in args.pairs.split(","):
        k, c = (int(x) for x in item.split(":"))
        g = ternary_lower_bound(k, c)
        try:
            colours = str(optimal_cluster_colouring(g, c)[0])
        except BudgetExceeded as exc:
            colours = f"{exc.lower}..{exc.upper}"
        try:
            minor = "yes" if has_minor(g, closure_tree(k, 3)) else "no"
        except BudgetExceeded:
            minor = "?"
        print(f"{k:2d} {c:2d} {g.n:4d} {colours:>8s} {2 * k - 2:5d} {minor:>13s}")


if __name__ == "__main__":
    main()
