"""Command-line front end.

Exit codes: 0 ok, 1 verification failure (or a construction that could not
finish), 2 input error, 3 evidence of three pairwise invisible points.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import serialize as ser
from .errors import AlphaRefuted, InvalidInput, NonconvexError, UnsupportedInput
from .invisibility import (CHROMATIC_BUDGET, best_bound, generate_witnesses, lower_bounds,
                           sector_certificates, sector_counting_bound, witness_set)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_ALPHA = 0, 1, 2, 3


class _Input:
    """Reads each path once; ``-`` is stdin."""

    def __init__(self, stdin):
        self.stdin = stdin
        self._stdin_text = None

    def text(self, path: str) -> str:
        if path == "-":
            if self._stdin_text is None:
                self._stdin_text = self.stdin.read()
            return self._stdin_text
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as e:
            raise InvalidInput("cannot read %s: %s" % (path, e)) from e

    def json(self, path: str):
        return ser.loads(self.text(path))


def _instance(doc):
    """Accept an instance or a decomposition that embeds one."""
    if isinstance(doc, dict) and "instance" in doc and "polygon" not in doc:
        doc = doc["instance"]
    return ser.instance_from_dict(doc)


def _sector_cert(doc, X, density):
    if not isinstance(doc, dict) or "rays" not in doc or "center" not in doc:
        return None
    rays = [ser.parse_point(r) for r in doc["rays"]]
    center = ser.parse_point(doc["center"])
    lb = int(doc.get("per_sector_lb", 3))
    given = [ser.parse_point(p) for p in doc.get("witnesses", [])]
    W = witness_set(given or list(generate_witnesses(X, density)))
    subs = sector_certificates(X, rays, center, W)
    if any(c is None for c in subs):
        return None
    return sector_counting_bound(X, rays, lb, center, subs)[1]

# ---------------------------------------------------------------- commands


def cmd_gallery(a, io, out):
    from .gallery import gallery

    g = gallery(a.name)
    extra = {"name": g.name, "expected": ser._plain(g.expected)}
    if g.rays:
        extra["rays"] = [ser.point_json(r) for r in g.rays]
        extra["center"] = ser.point_json(g.center)
        extra["per_sector_lb"] = g.expected.get("per_sector_lb", 3)
    out.write(ser.dumps(ser.instance_to_dict(g.X, g.witnesses, extra)))
    return EXIT_OK


def cmd_analyze(a, io, out):
    from .decompose import route_of
    from .region import check_interior_points_in_kernel, lnc_points
    from .structure import analyze

    X, _ = _instance(io.json(a.file))
    rep = {"components": len(X.components), "antennae": len(X.antennae),
           "M_i": [ser.segment_json(f.segment) for f in X.M_i],
           "M_b": [ser.segment_json(f.segment) for f in X.M_b],
           "lnc_points": [ser.point_json(p) for p in lnc_points(X)],
           "kernel_dim": None, "n": None, "route": route_of(X), "interior_points_in_kernel": True}
    if X.connected_polygon:
        st = analyze(X.S)
        rep["kernel_dim"] = st.kernel_dim if st.kernel else -1
        rep["n"] = st.n
    try:
        check_interior_points_in_kernel(X)
    except AlphaRefuted:
        rep["interior_points_in_kernel"] = False
    out.write(ser.dumps(rep))
    return EXIT_OK


def cmd_decompose(a, io, out):
    from .decompose import decompose

    X, W = _instance(io.json(a.file))
    try:
        dec = decompose(X, density=a.density)
    except AlphaRefuted as e:
        out.write(ser.dumps({"error": "alpha_refuted", "message": str(e),
                             "certificate": None if e.certificate is None
                             else ser.certificate_to_dict(e.certificate)}))
        return EXIT_ALPHA
    out.write(ser.dumps(ser.decomposition_to_dict(dec, X, W)))
    return EXIT_OK


def cmd_bound(a, io, out):
    doc = io.json(a.file)
    X, W = _instance(doc)
    res = lower_bounds(X, a.density, a.budget)
    certs = list(res["certificates"])
    if W:
        from .invisibility import build_graph, chromatic_number, convex_partition_number
        from .invisibility import PARTITION_BUDGET

        G = build_graph(X, witness_set(W))
        if G.n <= a.budget:
            certs.append(chromatic_number(G, a.budget)[1])
        if len(W) <= PARTITION_BUDGET:
            certs.append(convex_partition_number(X, W)[1])
    sc = _sector_cert(doc, X, a.density)
    if sc is not None:
        certs.append(sc)
    best = best_bound(certs)
    out.write(ser.dumps({"density": a.density, "witnesses": len(res["witnesses"]),
                         "bounds": best,
                         "certificates": [ser.certificate_to_dict(c) for c in certs]}))
    return EXIT_ALPHA if best["alpha"] >= 3 else EXIT_OK


def cmd_verify(a, io, out):
    from .verify import verify_decomposition

    if a.decomposition is None:
        doc = io.json(a.file)
        if "instance" not in doc:
            raise InvalidInput("decomposition does not embed an instance; pass it separately")
        X, W = _instance(doc)
        dec_doc = doc
    else:
        X, W = _instance(io.json(a.file))
        dec_doc = io.json(a.decomposition)
    dec = ser.decomposition_from_dict(dec_doc)
    W = witness_set(list(generate_witnesses(X, a.density)) + list(W or ()))
    rep = verify_decomposition(dec, X, W)
    out.write(ser.dumps(ser.report_to_dict(rep)))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_render(a, io, out):
    from .render import render_svg

    doc = io.json(a.file)
    X, _ = _instance(doc)
    cells = []
    if a.cells:
        cells = ser.decomposition_from_dict(io.json(a.cells)).cells
    elif isinstance(doc, dict) and "cells" in doc:
        cells = ser.decomposition_from_dict(doc).cells
    certs = []
    if a.certificates:
        cdoc = io.json(a.certificates)
        raw = cdoc.get("certificates", []) if isinstance(cdoc, dict) else cdoc
        certs = [ser.certificate_from_dict(c) for c in raw]
    svg = render_svg(X, cells, certs)
    if a.output in (None, "-"):
        out.write(svg)
    else:
        with open(a.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return EXIT_OK


def cmd_fuzz(a, io, out):
    from .fuzz import run_fuzz

    stats = run_fuzz(a.cases, a.seed)
    out.write(ser.dumps(stats.summary()))
    return EXIT_OK if not stats.failures else EXIT_VERIFY

# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nonconvex",
                                description="Convex decompositions of punctured polygonal regions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gallery", help="emit a named example instance")
    s.add_argument("name")
    s.set_defaults(func=cmd_gallery)

    s = sub.add_parser("analyze", help="structure report and route")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("decompose", help="decomposition JSON")
    s.add_argument("file")
    s.add_argument("--density", type=int, default=3)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("bound", help="lower-bound certificates")
    s.add_argument("file")
    s.add_argument("--density", type=int, default=4)
    s.add_argument("--budget", type=int, default=CHROMATIC_BUDGET)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("verify", help="check a decomposition")
    s.add_argument("file", help="instance, or a decomposition embedding it")
    s.add_argument("decomposition", nargs="?")
    s.add_argument("--density", type=int, default=3)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="SVG picture")
    s.add_argument("file")
    s.add_argument("--cells")
    s.add_argument("--certificates")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("fuzz", help="random instances through decompose and verify")
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return a.func(a, _Input(stdin), stdout)
    except (InvalidInput, UnsupportedInput) as e:
        stderr.write("input error: %s\n" % e)
        return EXIT_INPUT
    except AlphaRefuted as e:
        stderr.write("alpha refuted: %s\n" % e)
        return EXIT_ALPHA
    except NonconvexError as e:
        stderr.write("%s: %s\n" % (type(e).__name__, e))
        return EXIT_VERIFY


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
