"""Decompose every gallery instance, verify it and print the lower bounds.

    python scripts/reproduce_examples.py [--svg DIR]
"""
import argparse
import pathlib
import time

from nonconvex.decompose import decompose
from nonconvex.gallery import NAMES, gallery
from nonconvex.invisibility import (CHROMATIC_BUDGET, PARTITION_BUDGET, best_bound, build_graph,
                                    chromatic_number, convex_partition_number, find_odd_circuit,
                                    lower_bounds, sector_certificates, sector_counting_bound,
                                    witness_set)
from nonconvex.render import render_svg
from nonconvex.verify import verify_decomposition


def lower(g):
    if not g.witnesses:
        certs = lower_bounds(g.X, 20, chromatic_budget=0)["certificates"]
        return best_bound(certs)["gamma"], certs
    W = witness_set(g.witnesses)
    G = build_graph(g.X, W)
    certs = []
    if G.n <= CHROMATIC_BUDGET:
        certs.append(chromatic_number(G)[1])
    if G.n <= PARTITION_BUDGET:
        certs.append(convex_partition_number(g.X, list(W))[1])
    odd = find_odd_circuit(G)
    if odd is not None:
        certs.append(odd)
    if g.rays:
        subs = sector_certificates(g.X, g.rays, g.center, W)
        certs.append(sector_counting_bound(g.X, g.rays, 3, g.center, subs)[1])
    return best_bound(certs)["gamma"], certs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--svg", help="write one picture per instance here")
    a = ap.parse_args()
    print("%-5s %-6s %-12s %5s %5s %8s %7s" % ("name", "route", "tag", "cells", "lower", "verified",
                                               "secs"))
    for name in NAMES:
        g = gallery(name)
        t = time.time()
        dec = decompose(g.X)
        ok = verify_decomposition(dec, g.X, witness_set(g.witnesses) if g.witnesses else None).ok
        lb, certs = lower(g)
        print("%-5s %-6s %-12s %5d %5d %8s %7.1f" % (name, dec.route, dec.case_tag, len(dec), lb,
                                                     ok, time.time() - t))
        if a.svg:
            out = pathlib.Path(a.svg)
            out.mkdir(parents=True, exist_ok=True)
            (out / ("%s.svg" % name)).write_text(render_svg(g.X, dec.cells, certs, title=name))


if __name__ == "__main__":
    main()
