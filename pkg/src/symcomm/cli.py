"""Command-line front end.

Exit codes: 0 success (every certificate verified), 1 some certificate
failed, 2 bad arguments or unsupported family, 3 non-commuting input,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from . import catalog, satake
from .analysis import classify_pair
from .errors import ArgumentError, InternalError, NotCommutingError, SymcommError
from .io import dumps, load_element
from .pairs import Family, build_pair

EXIT_OK, EXIT_FAILED, EXIT_ARGS, EXIT_NONCOMMUTING, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _default_seed() -> int:
    raw = os.environ.get("SYMC_SEED")
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        return 1


def _family(args) -> Family:
    if not args.family:
        raise ArgumentError("--family is required")
    params = [v for v in (args.p, args.q) if v is not None] if args.n is None else [args.n]
    return Family(args.family, tuple(params))


def _add_family(sp, required=True):
    sp.add_argument("--family", required=required, help="A0, AI, AII, AIII, BDI, CI, CII or DIII")
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symcomm", description="Commuting pairs in classical symmetric Lie algebras")
    ap.add_argument("--seed", type=int, default=None, help="sampling seed (default: $SYMC_SEED or 1)")
    ap.add_argument("--json", action="store_true", help="print a JSON envelope")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for batch commands")
    sub = ap.add_subparsers(dest="command", required=True)

    _add_family(sub.add_parser("info", help="dimensions, ranks and Satake summary"))

    an = sub.add_parser("analyze", help="irregularity number of a commuting pair")
    _add_family(an)
    an.add_argument("--x", required=True, help="element file for x")
    an.add_argument("--y", required=True, help="element file for y")
    an.add_argument("--no-reduce", action="store_true", help="skip the p-Levi reduction")

    sub.add_parser("table3", help="rank-one d values")

    cat = sub.add_parser("catalog", help="explicit constructions")
    cat.add_argument("--case", required=True,
                     choices=["sp12", "so12", "sp8", "aiii", "dichotomy", "rank1"])
    cat.add_argument("--l", type=int, default=1)
    cat.add_argument("--eps", type=int, default=1)
    cat.add_argument("--r", type=int, default=0)
    cat.add_argument("--samples", type=int, default=40)
    _add_family(cat, required=False)

    red = sub.add_parser("reducibility", help="witness for a reducible commuting variety")
    _add_family(red)

    sat = sub.add_parser("satake", help="Satake diagram and sub-diagrams")
    _add_family(sat)
    sat.add_argument("--enumerate", action="store_true")
    return ap


# --------------------------------------------------------------------------
# commands; each returns (payload, exit code, human-readable lines)


def cmd_info(args, seed):
    fam = _family(args)
    pair = build_pair(fam, seed=seed)
    payload = {
        "family": fam.label, "n": pair.n, "field": pair.field,
        "dim_g": pair.dim_g, "dim_k": pair.dim_k, "dim_p": pair.dim_p,
        "rk_sym": pair.rk_sym, "dim_m": pair.dim_m,
    }
    try:
        d = satake.satake_diagram(fam)
        payload["satake"] = d.to_dict()
        payload["satake"]["subdiagrams"] = len(satake.enumerate_subdiagrams(d))
    except SymcommError as exc:
        payload["satake"] = {"unavailable": str(exc)}
    lines = [f"{k}: {v}" for k, v in payload.items() if k != "satake"]
    return payload, EXIT_OK, lines


def cmd_analyze(args, seed):
    fam = _family(args)
    pair = build_pair(fam, seed=seed)
    x, y = load_element(args.x), load_element(args.y)
    rep = classify_pair(pair, x, y, reduce=not args.no_reduce)
    d = rep.to_dict()
    lines = [f"{k}: {v}" for k, v in d.items() if k != "reduction"]
    if rep.reduction:
        lines.append(f"reduced irregularity: {rep.reduction.irregularity}")
    return d, EXIT_OK, lines


def _certs_result(certs):
    certs = sorted(certs, key=lambda c: (c.kind, c.family.tag, c.family.params))
    payload = [c.to_dict() for c in certs]
    bad = [c for c in certs if not c.verified]
    lines = [f"{'ok  ' if c.verified else 'FAIL'} {c.kind} {c.family.label} {c.claimed}" for c in certs]
    for c in bad:
        for name, exp, got in c.failures():
            lines.append(f"  {c.family.label}: {name}: expected {exp}, got {got}")
    return payload, EXIT_FAILED if bad else EXIT_OK, lines


def _rank1_cert(fam, seed):
    # plain dicts cross process boundaries; flint matrices do not pickle
    return catalog.rank1_d_value(fam, seed=seed)[1].to_dict()


def cmd_table3(args, seed):
    fams = list(catalog.TABLE3)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            payload = list(ex.map(_rank1_cert, fams, [seed] * len(fams)))
    else:
        payload = [_rank1_cert(f, seed) for f in fams]
    # keep the table order rather than sorting
    lines, bad = [], False
    for f, c in zip(fams, payload):
        lines.append(f"{'ok  ' if c['verified'] else 'FAIL'} {f.label}: d = {c['claimed'].get('d')}")
        for row in c["transcript"]:
            if row["expected"] != row["got"]:
                bad = True
                lines.append(f"  {f.label}: {row['check']}: expected {row['expected']}, got {row['got']}")
        bad = bad or not c["verified"]
    return payload, EXIT_FAILED if bad else EXIT_OK, lines


def cmd_catalog(args, seed):
    case = args.case
    if case == "sp12":
        cert = catalog.cii_sp12_rigid_pair(seed=seed)
    elif case == "so12":
        cert = catalog.diii_so12_rigid_pair(seed=seed)
    elif case == "sp8":
        cert = catalog.cii_sp8_c_value(args.samples, seed=seed)
    elif case == "aiii":
        cert = catalog.aiii_rigid_pair(args.l, args.eps, args.r, seed=seed)
    elif case == "dichotomy":
        cert = catalog.subregular_dichotomy(_family(args), samples=args.samples, seed=seed)
    else:
        cert = catalog.rank1_d_value(_family(args), seed=seed)[1]
    return _certs_result([cert])


def cmd_reducibility(args, seed):
    return _certs_result([catalog.reducibility_certificate(_family(args), seed=seed)])


def cmd_satake(args, seed):
    fam = _family(args)
    d = satake.satake_diagram(fam)
    payload = {"diagram": d.to_dict()}
    lines = [f"{fam.label}: {d.dynkin}, white {list(d.white)}, black {list(d.black)}, "
             f"arrows {[list(a) for a in d.arrows]}, rank {d.rank}"]
    if args.enumerate:
        subs = []
        for s in satake.enumerate_subdiagrams(d):
            comps = satake.classify_subdiagram(d, s)
            subs.append({
                "nodes": list(s.sorted()),
                "levi_rank": satake.levi_rank(d, s),
                "dim_c_a": satake.dim_c_a(d, s),
                "maximal_proper": satake.is_maximal_proper(d, s),
                "components": [c.to_dict() for c in comps],
            })
            names = " + ".join("compact" if c.compact else c.family.label for c in comps) or "-"
            lines.append(f"  {list(s.sorted())}: levi rank {subs[-1]['levi_rank']}, "
                         f"dim c_a {subs[-1]['dim_c_a']}, {names}")
        payload["subdiagrams"] = subs
        lines.append(f"{len(subs)} sub-diagrams")
    return payload, EXIT_OK, lines


COMMANDS = {
    "info": cmd_info, "analyze": cmd_analyze, "table3": cmd_table3, "catalog": cmd_catalog,
    "reducibility": cmd_reducibility, "satake": cmd_satake,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = args.seed if args.seed is not None else _default_seed()
    t0 = time.perf_counter()
    try:
        payload, code, lines = COMMANDS[args.command](args, seed)
    except NotCommutingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCOMMUTING
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SymcommError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    if args.json:
        env = {
            "tool_version": __version__,
            "command": args.command,
            "seed": seed,
            "wall_time_ms": round(1000 * (time.perf_counter() - t0)),
            "payload": payload,
        }
        print(dumps(env))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
