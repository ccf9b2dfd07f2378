"""Tabulate tau and sigma for every 0/1 sequence up to a given length, with the LP oracle alongside."""

import argparse
import time
from itertools import product

from posbasis.omega import omega_str, sigma, tau
from posbasis.oracle import tau_oracle_canonical


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4, help="largest number of nodes")
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()

    mismatches = 0
    t0 = time.perf_counter()
    print(f"{'omega':>12} {'tau':>4} {'oracle':>6} {'sigma':>5}")
    for n in range(1, args.max_n + 1):
        for w in product((0, 1), repeat=n + 1):
            got = "-" if args.no_oracle else tau_oracle_canonical(w)
            mismatches += got != "-" and got != tau(w)
            print(f"{omega_str(w):>12} {tau(w):>4} {got:>6} {sigma(w):>5}")
    print(f"# {mismatches} mismatches, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
