"""Least n at which the n-fan, n-fat star and n-fat path stop being
2-colourable with clustering c, found with the exact oracle."""

import argparse
import time

from clustercol.colouring import optimal_cluster_colouring
from clustercol.config import BudgetExceeded
from clustercol.generators import fan, fat_path, fat_star

FAMILIES = {"fan": fan, "fat_star": fat_star, "fat_path": fat_path}


def first_non_2_colourable(make, c, n_max):
    for n in range(1, n_max + 1):
        g = make(n)
        try:
            k, _ = optimal_cluster_colouring(g, c)
        except BudgetExceeded:
            return None, n
        if k >= 3:
            return n, g.n
    return None, None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--c", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=14)
    args = ap.parse_args()

    print(f"{'family':9s} {'c':>2s} {'first n':>8s} {'vertices':>9s} {'secs':>6s}")
    for c in args.c:
        for name, make in FAMILIES.items():
            t = time.perf_counter()
            n, size = first_non_2_colourable(make, c, args.n_max)
            shown = "-" if n is None else str(n)
            print(f"{name:9s} {c:2d} {shown:>8s} {str(size or '-'):>9s} {time.perf_counter() - t:6.2f}")


if __name__ == "__main__":
    main()
