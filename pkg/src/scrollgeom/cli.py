"""Command line front end: one-shot computations and the reproduction suite."""

import argparse
import json
import os
import re
import sys
import warnings

from .apolarity import base_locus, orthogonal_complement, rank_strata
from .claims import CLAIMS, run_claim
from .constructions import (DEFAULT_PRIME, SECONDARY_PRIME, UNION_COORDS,
                            bilink_pipeline, del_pezzo, elliptic_scroll,
                            enumerate_polarizations, general_w_system,
                            scroll_union, source_ring)
from .errors import PositiveDimensionalStratum
from .groebner import Ideal, graded_piece
from .hilbert import scheme_report
from .idealops import quotient
from .poly import PolyRing, render_polynomial

_HEADER = re.compile(r"ring\s+([A-Za-z_]+)(\d+)\.\.([A-Za-z_]+)(\d+)\s+p=(\d+)\s*$")

_file_rings = {}


class UsageError(Exception):
    pass


class RunConfig:
    """Runtime knobs shared by every subcommand."""

    __slots__ = ("prime", "secondary_prime", "seed", "degree_ceiling",
                 "output")

    def __init__(self, prime=DEFAULT_PRIME, secondary_prime=SECONDARY_PRIME,
                 seed=0, degree_ceiling=6, output="text"):
        for p in (prime, secondary_prime):
            if p % 6 != 1 or p % 4 != 1:
                raise UsageError(
                    "prime %d must be 1 mod 6 and 1 mod 4 so the needed"
                    " roots of unity exist" % p)
        self.prime = prime
        self.secondary_prime = secondary_prime
        self.seed = seed
        self.degree_ceiling = degree_ceiling
        self.output = output


def _ring_for(names, p):
    key = (tuple(names), p)
    got = _file_rings.get(key)
    if got is None:
        got = PolyRing(list(names), p)
        _file_rings[key] = got
    return got


def parse_ideal_file(path):
    """Ideal from the one-polynomial-per-line format with a ring header."""
    ring = None
    polys = []
    try:
        fh = open(path)
    except OSError as err:
        raise UsageError(str(err))
    with fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ring is None:
                m = _HEADER.match(line)
                if not m:
                    raise UsageError(
                        "%s:%d: expected header like 'ring x0..x5 p=10009'"
                        % (path, lineno))
                stem0, lo, stem1, hi, p = m.groups()
                if stem0 != stem1 or int(lo) != 0 or int(hi) < 1:
                    raise UsageError(
                        "%s:%d: variable range must look like x0..xN"
                        % (path, lineno))
                names = ["%s%d" % (stem0, i) for i in range(int(hi) + 1)]
                ring = _ring_for(names, int(p))
                continue
            try:
                polys.append(ring.parse(line))
            except Exception as err:
                raise UsageError("%s:%d: %s" % (path, lineno, err))
    if ring is None:
        raise UsageError("%s: missing ring header" % path)
    if not polys:
        raise UsageError("%s: no polynomials" % path)
    return Ideal(ring, polys)


def _emit(cfg, text_lines, payload):
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_gb(cfg, args):
    I = parse_ideal_file(args.file)
    gb = I.groebner_basis()
    lines = ["reduced basis, %d elements:" % len(gb)]
    lines += [render_polynomial(g) for g in gb]
    _emit(cfg, lines, {"size": len(gb),
                       "basis": [render_polynomial(g) for g in gb]})
    return 0


def cmd_hilbert(cfg, args):
    I = parse_ideal_file(args.file)
    rep = scheme_report(I, seed=cfg.seed, hf_ceiling=cfg.degree_ceiling,
                        gen_ceiling=cfg.degree_ceiling)
    d = rep.to_json_dict()
    lines = ["dim %d  degree %d" % (rep.dim, rep.degree)]
    if rep.sectional_genus is not None:
        lines.append("sectional genus %d" % rep.sectional_genus)
    lines.append("hilbert function %s" % d["hf"])
    lines.append("generator degrees %s" % d["gen_degrees"])
    _emit(cfg, lines, d)
    return 0


def cmd_quotient(cfg, args):
    I = parse_ideal_file(args.fileI)
    J = parse_ideal_file(args.fileJ)
    if I.ring is not J.ring:
        raise UsageError("the two files use different rings")
    Q = quotient(I, J)
    gb = Q.groebner_basis()
    lines = ["quotient ideal, %d basis elements:" % len(gb)]
    lines += [render_polynomial(g) for g in gb]
    _emit(cfg, lines, {"size": len(gb),
                       "basis": [render_polynomial(g) for g in gb]})
    return 0


def cmd_apolar(cfg, args):
    I = parse_ideal_file(args.file)
    V = list(I.generators)
    if len(V) != 6:
        raise UsageError("apolar expects exactly 6 quadrics, got %d" % len(V))
    web = orthogonal_complement(V)
    payload = {"web": [render_polynomial(b) for b in web.basis]}
    bl = base_locus(V)
    payload["base_locus"] = {"dim": bl.dim, "degree": bl.degree}
    try:
        r1, r2 = rank_strata(web)
        payload["rank1_count"] = r1
        payload["rank2_count"] = r2
        strata_line = "rank strata: %d rank-1, %d isolated rank-2" % (r1, r2)
    except PositiveDimensionalStratum as err:
        payload["rank_strata"] = "positive-dimensional"
        strata_line = "rank strata: positive-dimensional (%s)" % err
    lines = ["apolar web basis:"] + ["  " + s for s in payload["web"]]
    lines.append(strata_line)
    lines.append("base locus: dim %d degree %d" % (bl.dim, bl.degree))
    _emit(cfg, lines, payload)
    return 0


def cmd_delpezzo(cfg, args):
    if args.t not in (5, 6, 7, 8):
        raise UsageError("t must be 5, 6, 7 or 8")
    dp = del_pezzo(args.t, p=cfg.prime, seed=cfg.seed)
    d = dp.to_json_dict()
    rep = dp.report
    lines = ["%s: dim %d degree %d genus %s, %d basepoints" %
             (dp.label, rep.dim, rep.degree, rep.sectional_genus,
              dp.basepoints),
             "generator degrees %s" % d["report"]["gen_degrees"]]
    _emit(cfg, lines, d)
    return 0


def _parse_coords(text):
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError("coords must be four comma-separated integers")
    if len(vals) != 4:
        raise UsageError("coords must have exactly four entries")
    return vals


def cmd_scroll(cfg, args):
    coords = _parse_coords(args.coords)
    try:
        X = elliptic_scroll(coords, p=cfg.prime, seed=cfg.seed)
    except ValueError as err:
        raise UsageError(str(err))
    d = X.to_json_dict()
    d["preset"] = X.preset
    d["dim_I3"] = graded_piece(X.ideal, 3).dim
    rep = X.report
    lines = ["scroll at %s (line preset %d): dim %d degree %d genus %s" %
             (coords, X.preset, rep.dim, rep.degree, rep.sectional_genus),
             "cubics through it: %d" % d["dim_I3"]]
    _emit(cfg, lines, d)
    return 0


def cmd_union(cfg, args):
    p = cfg.prime
    c1 = tuple(v % p for v in UNION_COORDS[0])
    Y = scroll_union(c1, UNION_COORDS[1], p=p, seed=cfg.seed)
    d = Y.to_json_dict()
    d["dim_I5"] = graded_piece(Y.ideal, 5).dim
    d["dim_I4"] = graded_piece(Y.ideal, 4).dim
    rep = Y.report
    lines = ["union of the two special scrolls: dim %d degree %d" %
             (rep.dim, rep.degree),
             "quintics through it: %d, quartics: %d" %
             (d["dim_I5"], d["dim_I4"])]
    _emit(cfg, lines, d)
    return 0


def cmd_pipeline(cfg, args):
    p = cfg.prime
    c1 = tuple(v % p for v in UNION_COORDS[0])
    Y = scroll_union(c1, UNION_COORDS[1], p=p, seed=cfg.seed)
    pr = bilink_pipeline(Y, seed=cfg.seed)
    d = pr.to_json_dict()
    s = pr.integer_summary()
    lines = ["bilinkage at seed %d:" % cfg.seed]
    lines += ["  %s = %s" % (k, v) for k, v in sorted(s.items())]
    _emit(cfg, lines, d)
    return 0


def _table_payload(cfg, n):
    if n == 1:
        return [r.to_json_dict() for r in enumerate_polarizations()]
    if n == 2:
        rows = []
        for t in (5, 6, 7, 8):
            V = general_w_system(t, source_ring(cfg.prime), seed=cfg.seed)
            web = orthogonal_complement(V)
            r1, r2 = rank_strata(web)
            bl = base_locus(V)
            rows.append({"t": t, "rank1": r1, "rank2": r2,
                         "basepoints": bl.degree if bl.dim >= 0 else 0})
        return rows
    if n == 3:
        return [{"t": t, "generator_degrees":
                 del_pezzo(t, p=cfg.prime, seed=cfg.seed)
                 .to_json_dict()["report"]["gen_degrees"]}
                for t in (5, 6, 7, 8)]
    if n == 4:
        rows = []
        for t in (5, 6, 7, 8):
            dp = del_pezzo(t, p=cfg.prime, seed=cfg.seed)
            for d in (3, 4, 5):
                dim = graded_piece(dp.ideal, d).dim
                if dim:
                    rows.append({"t": t, "degree": d, "dim": dim})
        return rows
    raise UsageError("table number must be 1, 2, 3 or 4")


def cmd_table(cfg, args):
    payload = _table_payload(cfg, args.n)
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_repro_all(cfg, args):
    results = []
    failed = 0
    for claim in CLAIMS:
        res = run_claim(claim, cfg)
        results.append(res)
        if cfg.output != "json":
            mark = "PASS" if res.ok else "FAIL"
            print("[%s] %-22s %-48s %6.1fs"
                  % (mark, res.id, res.title, res.seconds), flush=True)
            if not res.ok:
                print("       ledger: %s" % res.ledger)
        if not res.ok:
            failed += 1
    if cfg.output == "json":
        print(json.dumps([r.to_json_dict() for r in results], indent=2,
                         sort_keys=True))
    else:
        total = sum(r.seconds for r in results)
        print("%d/%d claims pass in %.1fs at p=%d"
              % (len(results) - failed, len(results), total, cfg.prime))
    return 1 if failed else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="scrollgeom",
        description="exact reproduction suite for the scroll geometry"
                    " constructions over a prime field")
    ap.add_argument("--prime", type=int,
                    default=int(os.environ.get("REPRO_PRIME", DEFAULT_PRIME)))
    ap.add_argument("--secondary-prime", type=int, default=SECONDARY_PRIME)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--degree-ceiling", type=int, default=6)
    ap.add_argument("--output", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gb", help="reduced basis of an ideal file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_gb)
    s = sub.add_parser("hilbert", help="dimension, degree, genus of an ideal")
    s.add_argument("file")
    s.set_defaults(fn=cmd_hilbert)
    s = sub.add_parser("quotient", help="ideal quotient I : J")
    s.add_argument("fileI")
    s.add_argument("fileJ")
    s.set_defaults(fn=cmd_quotient)
    s = sub.add_parser("apolar", help="apolar web and rank strata of a"
                                      " 6-quadric system")
    s.add_argument("file")
    s.set_defaults(fn=cmd_apolar)
    s = sub.add_parser("delpezzo", help="degree-t image of projective"
                                        " 3-space")
    s.add_argument("t", type=int)
    s.set_defaults(fn=cmd_delpezzo)
    s = sub.add_parser("scroll", help="elliptic scroll at pencil coordinates")
    s.add_argument("coords", help="a,b,c,d")
    s.set_defaults(fn=cmd_scroll)
    s = sub.add_parser("union", help="degree-12 union of the two special"
                                     " scrolls")
    s.set_defaults(fn=cmd_union)
    s = sub.add_parser("pipeline", help="quintic-quartic bilinkage run")
    s.set_defaults(fn=cmd_pipeline)
    s = sub.add_parser("table", help="computed rows of a numbered table")
    s.add_argument("n", type=int)
    s.set_defaults(fn=cmd_table)
    s = sub.add_parser("repro-all", help="run every claim and print the"
                                         " ledger")
    s.set_defaults(fn=cmd_repro_all)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(prime=args.prime, secondary_prime=args.secondary_prime,
                        seed=args.seed, degree_ceiling=args.degree_ceiling,
                        output=args.output)
    except UsageError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        try:
            return args.fn(cfg, args)
        except UsageError as err:
            print("error: %s" % err, file=sys.stderr)
            return 2


if __name__ == "__main__":
    sys.exit(main())
