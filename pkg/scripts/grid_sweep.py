#!/usr/bin/env python3
"""Invariant sweep over the family grid (the long property suite)."""

import argparse
import json
import sys
from dataclasses import fields

from symcomm.pairs import Family
from symcomm.sweep import SweepConfig, run_sweep, summary


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(SweepConfig):
        if f.name != "families":
            ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    ap.add_argument("--family", action="append", default=[],
                    help="restrict to e.g. CII:2,2 (repeatable)")
    ap.add_argument("--out", help="write the JSON summary here")
    args = ap.parse_args(argv)
    fams = []
    for spec in args.family:
        tag, _, ps = spec.partition(":")
        fams.append(Family.of(tag, *[int(v) for v in ps.split(",") if v]))
    cfg = SweepConfig(args.max_pq, args.max_n, args.samples, args.seed, args.height, args.jobs, tuple(fams))

    def progress(r):
        flag = "ok  " if not r.violations else "FAIL"
        print(f"{flag} {r.family:<11}{r.samples:>5} samples {r.seconds:7.1f}s", flush=True)

    res = run_sweep(cfg, progress=progress)
    if cfg.jobs > 1:
        for r in res:
            progress(r)
    s = summary(res)
    print(f"{s['pairs']} pairs, {s['samples']} samples, {s['violations']} violations")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(s, fh, indent=1)
    return 1 if s["violations"] else 0


if __name__ == "__main__":
    sys.exit(main())
