"""Command-line front end: batch reports over every library operation.

Verbs: inv, certify, optimize, greedy, switch-scan, jacobian, dual,
constants, iso.  Graphs come from an edge-list file or ``--family
name[:params]``.  Exit codes: 0 success, 1 domain error, 2 usage error.
All commands are deterministic; ``--jobs`` never changes output bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import families, metric, search, surface
from .extremal import (CutKind, certify_cut_max, certify_diameter_min,
                       certify_girth_max, tree_weight_ascent)
from .graphs import (Domain, GraphError, WeightPoint, emit_dot, emit_graph,
                     parse_graph)
from .lattice import jacobian
from .spectral import (TreeMethod, is_ramanujan, mckay_sigma, moore_bound,
                       spectrum, tree_number)


def _parse_family(spec):
    parts = spec.split(":")
    name = parts[0]
    params = []
    for p in parts[1:]:
        if "," in p:
            params.extend(int(t) for t in p.split(",") if t)
        else:
            params.append(int(p))
    return families.make_named(name, params)


def _load_input(arg, family):
    """Resolve a positional path / family string / --family flag to a WeightPoint."""
    if family:
        return WeightPoint.unit(_parse_family(family))
    if arg is None:
        raise GraphError("no input graph: give a file path or --family")
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    if "/" not in arg and not arg.endswith(".txt"):
        return WeightPoint.unit(_parse_family(arg))
    raise GraphError(f"no such input file: {arg}")


def _emit(report, fmt, text_renderer=None, dot_source=None):
    if fmt == "json":
        print(json.dumps(report, indent=2))
    elif fmt == "dot":
        if dot_source is None:
            raise GraphError("this verb has no DOT representation")
        sys.stdout.write(dot_source)
    else:
        if text_renderer is None:
            print(json.dumps(report, indent=2))
        else:
            text_renderer(report)


def _cmd_inv(args):
    w = _load_input(args.input, args.family)
    g = w.graph
    rep = {"n": g.n, "m": g.m, "degrees": list(g.degrees)}
    tr = tree_number(w, TreeMethod.COFACTOR)
    rep.update(tr.to_json_dict())
    if g.m and not all(x == 0 for x in w.weights):
        try:
            cs = metric.girth(w)
            rep["girth"] = str(cs.girth)
            rep["systole_count"] = cs.count
        except GraphError:
            rep["girth"] = None
    if g.is_connected() and g.n >= 2:
        ms = metric.diameter(w)
        rep["diameter"] = str(ms.diameter)
        rep["meridian_count"] = ms.count
        sp = spectrum(w)
        rep["laplacian_eigenvalues"] = [round(x, 9) for x in sp.laplacian_eigenvalues]
        if g.regularity() is not None:
            rep["ramanujan"] = is_ramanujan(g)["verdict"]
        if g.n <= 12 or args.cuts:
            cr = metric.cut_constants(w)
            rep["expansion_constant"] = str(cr.expansion)
            rep["cheeger_constant"] = str(cr.cheeger)

    def text(r):
        for k, v in r.items():
            print(f"{k}: {v}")

    _emit(rep, args.format, text, emit_dot(w))


def _cmd_certify(args):
    w = _load_input(args.input, args.family)
    if args.objective == "girth":
        cert = certify_girth_max(w)
    elif args.objective == "diameter":
        cert = certify_diameter_min(w)
    else:
        wdp = WeightPoint(w.graph, w.weights, Domain.DEGREE_PRESERVING)
        kind = CutKind.EXPANSION if args.objective == "expansion" else CutKind.CHEEGER
        cert = certify_cut_max(wdp, kind)
    rep = cert.to_json_dict()

    def text(r):
        print(f"objective: {r['objective']}")
        print(f"verdict:   {r['verdict']}")
        if r["cone_coefficients"] is not None:
            print("the all-ones vector is this nonnegative combination of the")
            print("active incidence columns (proof of local extremality):")
            print("  " + " ".join(r["cone_coefficients"]))
        if r["direction"] is not None:
            print("improving direction (sums to zero, verified by recomputation):")
            print("  " + " ".join(r["direction"]))
            print(f"objective moves {r['value_before']} -> {r['value_after']} "
                  f"at epsilon = {r['epsilon']}")

    _emit(rep, args.format, text)


def _cmd_optimize(args):
    w = _load_input(args.input, args.family)
    domain = Domain.FULL if args.domain == "full" else Domain.DEGREE_PRESERVING
    res = tree_weight_ascent(w.graph, domain,
                             tol=args.tol, max_iter=args.max_iter)
    rep = {
        "converged": res.converged,
        "iterations": res.iterations,
        "tau": str(res.final_tau),
        "tau_float": float(res.final_tau),
        "resistance_spread": str(res.resistance_spread),
        "weights": [str(x) for x in res.final_point.weights],
    }
    _emit(rep, args.format)


def _cmd_greedy(args):
    trace = search.greedy_sequence(target_n=args.to, jobs=args.jobs)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace.to_jsonl())
    rep = {
        "steps": [{"n": s.graph.n, "tau": str(s.tau), "girth": s.girth,
                   "tie_count": s.tie_count, "tie_classes": s.tie_classes}
                  for s in trace.steps],
        "final_n": trace.final_graph.n,
        "final_graph": emit_graph(trace.final_graph),
    }

    def text(r):
        print("n    tau                  girth  ties")
        for s in r["steps"]:
            print(f"{s['n']:<4} {s['tau']:<20} {s['girth']:<6} "
                  f"{s['tie_count']}x{s['tie_classes']}")

    _emit(rep, args.format, text, emit_dot(trace.final_graph))


def _cmd_switch_scan(args):
    w = _load_input(args.input, args.family)
    res = search.edge_switch_scan(w.graph)
    rep = {
        "best_switch": None if res["best_switch"] is None
        else [list(res["best_switch"][0]), list(res["best_switch"][1])],
        "delta_tau": str(res["delta_tau"]),
        "improving": res["improving"],
    }
    _emit(rep, args.format)


def _cmd_jacobian(args):
    w = _load_input(args.input, args.family)
    rep = jacobian(w.graph).to_json_dict()

    def text(r):
        print(f"invariant factors: {r['invariant_factors']}")
        print(f"group order (tau): {r['group_order']}")
        print(f"lattice dimension: {r['lattice_dimension']}")
        print(f"min norm (girth):  {r['unnormalized_min_norm']}")
        print(f"normalized norm:   {r['normalized_min_norm']}")

    _emit(rep, args.format, text)


def _cmd_dual(args):
    w = _load_input(args.input, args.family)
    with open(args.rotation, encoding="utf-8") as fh:
        rot = surface.parse_rotation(fh.read(), w.graph)
    emb = surface.EmbeddedGraph(w.graph, rot)
    mg, dual_rot = surface.dual(emb)
    rep = {
        "genus": emb.genus,
        "faces": [list(f) for f in emb.face_edge_walks()],
        "dual_n": mg.n,
        "dual_edges": [list(e) for e in mg.edges],
        "dual_is_simple": mg.is_simple(),
        "tau": str(search.tau_int(w.graph)),
        "dual_tau": str(mg.tree_number()),
    }
    _emit(rep, args.format)


def _cmd_constants(args):
    if args.sigma is not None:
        val = mckay_sigma(args.sigma)
        _emit({"sigma": val, "k": args.sigma}, args.format,
              lambda r: print(r["sigma"]))
    elif args.moore is not None:
        k, girth = args.moore
        val = moore_bound(k, girth)
        _emit({"moore_bound": val, "k": k, "girth": girth}, args.format,
              lambda r: print(r["moore_bound"]))
    elif args.lattice_entropy:
        rep = surface.lattice_entropy_square()
        _emit(rep, args.format, lambda r: print(r["value"]))
    else:
        raise GraphError("constants: pass --sigma K, --moore K G, or --lattice-entropy")


def _cmd_iso(args):
    g1 = _load_input(args.first, None).graph
    g2 = _load_input(args.second, None).graph
    verdict = search.isomorphic(g1, g2)
    _emit({"isomorphic": verdict}, args.format,
          lambda r: print("isomorphic" if r["isomorphic"] else "not isomorphic"))


def build_parser():
    ap = argparse.ArgumentParser(
        prog="extg",
        description="exact extremal invariants of weighted graphs")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", help="edge-list file or family spec")
            p.add_argument("--family", help="named family, e.g. petersen or hypercube:3")
        p.add_argument("--format", choices=["json", "text", "dot"], default="text")
        p.add_argument("--json", action="store_const", const="json",
                       dest="format", help="shorthand for --format json")

    p = sub.add_parser("inv", help="invariant report (tau, girth, diameter, spectrum)")
    common(p)
    p.add_argument("--cuts", action="store_true",
                   help="force the exponential cut scan on larger graphs")
    p.set_defaults(fn=_cmd_inv)

    p = sub.add_parser("certify", help="local extremality certificate at the input point")
    common(p)
    p.add_argument("--objective", required=True,
                   choices=["girth", "diameter", "expansion", "cheeger"])
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("optimize", help="ascend the weighted tree number")
    common(p)
    p.add_argument("--domain", choices=["full", "degree"], default="full")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-iter", type=int, default=20000)
    p.set_defaults(fn=_cmd_optimize)

    p = sub.add_parser("greedy", help="greedy edge-insertion sequence from K4")
    common(p, with_input=False)
    p.add_argument("--to", type=int, required=True, help="target vertex count (even)")
    p.add_argument("--trace", help="write per-step JSON lines to this file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_greedy)

    p = sub.add_parser("switch-scan", help="best tree-count-increasing edge switch")
    common(p)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_switch_scan)

    p = sub.add_parser("jacobian", help="critical group and minimal norms")
    common(p)
    p.set_defaults(fn=_cmd_jacobian)

    p = sub.add_parser("dual", help="faces, genus, and dual of an embedded graph")
    common(p)
    p.add_argument("--rotation", required=True,
                   help="rotation-system file: lines 'v: e1 e2 ...'")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("constants", help="closed-form constants")
    common(p, with_input=False)
    p.add_argument("--sigma", type=int, help="tree-growth constant sigma_k")
    p.add_argument("--moore", type=int, nargs=2, metavar=("K", "G"),
                   help="Moore bound f_0(k, g)")
    p.add_argument("--lattice-entropy", action="store_true",
                   help="square-lattice tree entropy, two independent ways")
    p.set_defaults(fn=_cmd_constants)

    p = sub.add_parser("iso", help="exact isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--format", choices=["json", "text", "dot"], default="text")
    p.add_argument("--json", action="store_const", const="json", dest="format")
    p.set_defaults(fn=_cmd_iso)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
