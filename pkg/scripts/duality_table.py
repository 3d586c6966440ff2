#!/usr/bin/env python3
"""Print the table K_u(a v~) for n = 1 and a few indices, showing its symmetry in u, v."""
import argparse

from macinterp.combin import tilde_point
from macinterp.exactalg import A
from macinterp.families import K_family


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=3, help="indices run over -max..max")
    args = ap.parse_args()
    idx = range(-args.max, args.max + 1)
    vals = {(u, v): K_family((u,)).substitute(tilde_point((v,)).scale(A)) for u in idx for v in idx}
    for u in idx:
        for v in idx:
            mark = "=" if vals[(u, v)] == vals[(v, u)] else "!"
            print(f"K_{u}(a*{v}~) {mark} {vals[(u, v)]}")


if __name__ == "__main__":
    main()
