#!/usr/bin/env python3
"""Run every catalog certificate and optionally write them to a JSON file."""

import argparse
import json
import sys
import time

from symcomm import catalog
from symcomm.pairs import Family


def certificates(seed: int, samples: int):
    yield lambda: catalog.cii_sp12_rigid_pair(seed=seed, check_distinguished=True)
    yield lambda: catalog.diii_so12_rigid_pair(seed=seed, check_distinguished=True)
    for l, eps, r in [(0, 1, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 0, 1)]:
        yield lambda l=l, eps=eps, r=r: catalog.aiii_rigid_pair(l, eps, r, seed=seed)
    yield lambda: catalog.cii_sp8_c_value(samples, seed=seed)
    for fam in [Family.of("AIII", q, 1) for q in (2, 3, 4)] + [Family.of("CII", q, 1) for q in (2, 3)]:
        yield lambda fam=fam: catalog.subregular_dichotomy(fam, samples=samples, seed=seed)
    for fam in [Family.of("CII", 3, 3), Family.of("DIII", 6), Family.of("AIII", 2, 3), Family.of("CII", 1, 2),
                Family.of("CII", 2, 3), Family.of("CII", 4, 4), Family.of("DIII", 5), Family.of("DIII", 8)]:
        yield lambda fam=fam: catalog.reducibility_certificate(fam, seed=seed)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--out", help="write all certificates here as JSON")
    args = ap.parse_args(argv)
    out, bad = [], 0
    for make in certificates(args.seed, args.samples):
        t0 = time.perf_counter()
        c = make()
        dt = time.perf_counter() - t0
        print(f"{'ok  ' if c.verified else 'FAIL'} {c.kind:<22}{c.family.label:<11}{dt:6.2f}s  {c.claimed}")
        for name, exp, got in c.failures():
            print(f"      {name}: expected {exp}, got {got}")
        bad += not c.verified
        out.append(c.to_dict())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(out, fh, indent=1, sort_keys=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
