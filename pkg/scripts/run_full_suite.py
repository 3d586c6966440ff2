#!/usr/bin/env python3
"""Run every registered identity over the default sweeps and save the reports.

    python3 scripts/run_full_suite.py --out reports.json [--n 2] [--max-weight 3]
"""
import argparse
import json
import sys
import time

from macinterp.identities import REGISTRY, SweepConfig, run_identity


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, action="append")
    ap.add_argument("--max-weight", type=int)
    ap.add_argument("--out", default="reports.json")
    args = ap.parse_args()

    reports, start = [], time.perf_counter()
    for n in args.n or [1, 2, 3]:
        cfg = SweepConfig.default(n, args.max_weight)
        for name in REGISTRY:
            rep = run_identity(name, cfg)
            print(f"[n={n}] {rep.to_text()}", flush=True)
            reports.append(rep.to_dict())
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(reports, fh, indent=1, sort_keys=True)
    failed = sum(r["status"] != "pass" for r in reports)
    print(f"{len(reports)} reports, {failed} failing, {time.perf_counter() - start:.1f}s -> {args.out}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
