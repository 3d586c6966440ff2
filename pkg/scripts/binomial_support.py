#!/usr/bin/env python3
"""List the binomial coefficients [alpha choose beta] that are nonzero although
beta is not componentwise contained in alpha."""
import argparse

from macinterp.combin import compositions_upto, containment
from macinterp.families import binom


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-weight", type=int, default=3)
    args = ap.parse_args()
    comps = compositions_upto(args.n, args.max_weight)
    for a in comps:
        for b in comps:
            if sum(b) <= sum(a) and not containment(b, a):
                c = binom(a, b)
                if not c.is_zero():
                    print(f"[{a} choose {b}] = {c}")


if __name__ == "__main__":
    main()
