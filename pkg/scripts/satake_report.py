#!/usr/bin/env python3
"""Satake diagrams on the grid with their sub-diagram decompositions."""

import sys

from symcomm.pairs import grid_families
from symcomm.satake import (classify_subdiagram, dim_c_a, enumerate_subdiagrams, levi_rank,
                            satake_diagram)


def main():
    for fam in grid_families():
        if fam.tag == "BDI" and sum(fam.params) < 3:
            continue
        d = satake_diagram(fam)
        subs = enumerate_subdiagrams(d)
        print(f"{fam.label}: {d.dynkin}, black {list(d.black)}, arrows {[list(a) for a in d.arrows]}, "
              f"rank {d.rank}, {len(subs)} sub-diagrams")
        for s in subs:
            comps = " + ".join("compact" if c.compact else c.family.label
                               for c in classify_subdiagram(d, s)) or "-"
            print(f"    {list(s.sorted())}: rank {levi_rank(d, s)}, dim c_a {dim_c_a(d, s)}, {comps}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
