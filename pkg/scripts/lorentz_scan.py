"""How the Lorentz degree of x^2 + c grows as c shrinks toward 0."""

import argparse
from fractions import Fraction

from posbasis.bernstein import CapExceeded, lorentz_degree
from posbasis.polycore import Polynomial

X = Polynomial.x()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=400)
    args = ap.parse_args()
    print(f"{'c':>8} {'L':>5} {'L*c':>8}")
    for k in range(0, 12):
        c = Fraction(2) / 2**k
        try:
            L = lorentz_degree(X**2 + c, cap=args.cap)
        except CapExceeded:
            print(f"{str(c):>8}  >{args.cap}")
            continue
        print(f"{str(c):>8} {L:>5} {float(L * c):>8.3f}")


if __name__ == "__main__":
    main()
