"""Command-line interface.

Exit codes: 0 success, 2 graph-file parse error, 3 precondition violation,
4 budget or enumeration-cap exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .crossings import (
    crossing_poly_charpoly,
    crossing_poly_forest,
    crossing_profile,
    inertia_sweep,
)
from .errors import CapExceededError, GraphParseError
from .explorer import (
    explore,
    impossibility_by_rank,
    inertia_bounds,
    lattice_capacity,
    vertex_count_capacity,
)
from .graphio import format_graph, load_graph, save_graph
from .laplacian import (
    frobenius_distance_squared,
    inertia,
    perturb_simple,
    weighted_laplacian,
)
from .plots import svg_curves, svg_lattice, sweep_csv
from .ratpoly import Inertia, rational_root_in
from .sgraph import (
    WeightedSignedGraph,
    at_parameter,
    blocks,
    build_lattice_witness,
    component_profile,
    dot,
    negative_join,
    unique_inertia,
)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}")


def _graph_summary(wg: WeightedSignedGraph) -> dict:
    prof = component_profile(wg.graph)
    return {
        "n": wg.n,
        "m_plus": wg.graph.m_plus,
        "m_minus": wg.graph.m_minus,
        "c": prof.c,
        "c_plus": prof.c_plus,
        "c_minus": prof.c_minus,
        "tau": prof.tau,
    }


def _inertia_json(iv: Inertia) -> list[int]:
    return [iv.n_plus, iv.n_minus, iv.n_zero]


def _weights_json(wg: WeightedSignedGraph) -> dict:
    return {f"{u} {v}": str(w) for u, v, w in wg.weighted_edges()}


def worker_cap() -> int:
    """Optional SIGNED_INERTIA_THREADS caps the worker count (>= 1)."""
    raw = os.environ.get("SIGNED_INERTIA_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SIGNED_INERTIA_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise ValueError("SIGNED_INERTIA_THREADS must be >= 1")
    return cap


# -- command handlers ---------------------------------------------------------


def _cmd_info(args) -> dict:
    wg = load_graph(args.graph)
    ui = unique_inertia(wg.graph)
    return {
        "command": "info",
        "graph": _graph_summary(wg),
        "unique_inertia": _inertia_json(ui) if ui is not None else None,
        "lattice_capacity": lattice_capacity(wg.graph),
    }


def _cmd_inertia(args) -> dict:
    wg = load_graph(args.graph)
    t = _parse_fraction(args.t) if args.t is not None else None
    target = at_parameter(wg, t) if t is not None else wg
    return {
        "command": "inertia",
        "graph": _graph_summary(wg),
        "t": str(t) if t is not None else None,
        "inertia": _inertia_json(inertia(target)),
    }


def _poly_json(coeffs) -> list[str]:
    return [str(c) for c in coeffs]


def _cmd_crossing(args) -> dict:
    wg = load_graph(args.graph)
    report: dict = {"command": "crossing", "graph": _graph_summary(wg),
                    "method": args.method}
    if args.method in ("forest", "both"):
        cp = crossing_poly_forest(wg)
        report["forest"] = {
            "k_min": cp.k_min,
            "k_max": cp.k_max,
            "a": {str(k): str(v) for k, v in sorted(cp.a.items())},
            "polynomial": _poly_json(cp.to_polynomial().coeffs),
        }
    if args.method in ("charpoly", "both"):
        q = crossing_poly_charpoly(wg)
        report["charpoly"] = {"polynomial": _poly_json(q.coeffs)}
    if args.method == "both":
        forest_poly = crossing_poly_forest(wg).to_polynomial()
        qp = crossing_poly_charpoly(wg)
        ratio = None
        agree = False
        if forest_poly.is_zero and qp.is_zero:
            agree = True
        elif not forest_poly.is_zero and qp.degree == forest_poly.degree:
            ratio = qp.leading / forest_poly.leading
            agree = qp == forest_poly * ratio and ratio != 0
        report["agreement"] = {
            "proportional": agree,
            "ratio": str(ratio) if ratio is not None else None,
        }
    return report


def _cmd_sweep(args) -> dict:
    wg = load_graph(args.graph)
    profile = crossing_profile(wg)
    points = inertia_sweep(wg)
    try:
        from .crossings import _crossing_polynomial_any

        poly, _ = _crossing_polynomial_any(wg)
        roots = [
            str(r) if (r := rational_root_in(poly, lo, hi)) is not None else None
            for (lo, hi), _m in profile.crossings
        ]
    except CapExceededError:
        roots = [None] * len(profile.crossings)
    report = {
        "command": "sweep",
        "graph": _graph_summary(wg),
        "crossings": [
            {
                "interval": [str(lo), str(hi)],
                "multiplicity": mult,
                "rational_root": root,
            }
            for ((lo, hi), mult), root in zip(profile.crossings, roots)
        ],
        "trajectory": [
            {
                "t": str(pt.t),
                "inertia": _inertia_json(pt.inertia),
                "segment": [
                    str(pt.segment[0]),
                    str(pt.segment[1]) if pt.segment[1] is not None else None,
                ],
                "on_crossing": pt.on_crossing,
            }
            for pt in points
        ],
    }
    if args.plot:
        Path(args.plot).write_text(svg_curves(wg, title=Path(args.graph).name))
        report["plot"] = args.plot
    if args.csv:
        Path(args.csv).write_text(sweep_csv(wg, points))
        report["csv"] = args.csv
    return report


def _cmd_unique(args) -> dict:
    wg = load_graph(args.graph)
    ui = unique_inertia(wg.graph)
    return {
        "command": "unique",
        "graph": _graph_summary(wg),
        "unique": ui is not None,
        "inertia": _inertia_json(ui) if ui is not None else None,
    }


def _cmd_blocks(args) -> dict:
    wg = load_graph(args.graph)
    out = []
    for b in blocks(wg.graph):
        signs = {s for _, _, s in b.edges}
        kind = "mixed" if len(signs) > 1 else (
            "positive" if 1 in signs else "negative"
        )
        out.append(
            {
                "vertices": sorted(b.vertices),
                "edges": [[u, v, s] for u, v, s in b.edges],
                "sign": kind,
            }
        )
    return {"command": "blocks", "graph": _graph_summary(wg), "blocks": out}


def _cmd_explore(args) -> dict:
    wg = load_graph(args.graph)
    result = explore(wg.graph, budget=args.budget, seed=args.seed)
    achieved = []
    for iv in result.inertias():
        w = result.achieved[iv]
        achieved.append(
            {
                "inertia": _inertia_json(iv),
                "witness": {"weights": _weights_json(w.weighting), "t": str(w.t)},
            }
        )
    report = {
        "command": "explore",
        "graph": _graph_summary(wg),
        "budget": args.budget,
        "seed": args.seed,
        "evaluations_used": result.evaluations_used,
        "lattice_capacity": result.lattice_capacity,
        "excluded_by_rank": sorted(
            _inertia_json(iv) for iv in result.excluded
        ),
        "count": len(achieved),
        "achieved": achieved,
    }
    if args.lattice:
        Path(args.lattice).write_text(
            svg_lattice(result, title=Path(args.graph).name)
        )
        report["lattice"] = args.lattice
    return report


def _cmd_perturb(args) -> dict:
    wg = load_graph(args.graph)
    eps = _parse_fraction(args.eps)
    out = perturb_simple(wg, eps, seed=args.seed)
    dist2 = frobenius_distance_squared(
        weighted_laplacian(wg), weighted_laplacian(out)
    )
    if args.out:
        save_graph(out, args.out, comment=f"perturbed, eps={eps}")
    return {
        "command": "perturb",
        "graph": _graph_summary(wg),
        "eps": str(eps),
        "distance_squared": str(dist2),
        "weights": _weights_json(out),
        "out": args.out,
    }


def _cmd_bounds(args) -> dict:
    wg = load_graph(args.graph)
    b = inertia_bounds(wg.graph)
    n = wg.n
    return {
        "command": "bounds",
        "graph": _graph_summary(wg),
        "n_plus": [b.n_plus.lo, b.n_plus.hi],
        "n_minus": [b.n_minus.lo, b.n_minus.hi],
        "n_zero": [b.n_zero.lo, b.n_zero.hi],
        "lattice_capacity": lattice_capacity(wg.graph),
        "vertex_count_capacity": vertex_count_capacity(n) if n >= 3 else None,
        "excluded_by_rank": sorted(
            _inertia_json(iv) for iv in impossibility_by_rank(wg.graph)
        ),
    }


def _cmd_construct(args) -> dict:
    if args.kind == "dot":
        a = load_graph(args.args[0])
        va = int(args.args[1])
        b = load_graph(args.args[2])
        vb = int(args.args[3])
        built = dot(a, va, b, vb)
        comment = f"dot of {args.args[0]}@{va} and {args.args[2]}@{vb}"
    elif args.kind == "join":
        a = load_graph(args.args[0])
        b = load_graph(args.args[1])
        joined = negative_join(a.graph, b.graph)
        weights = dict(a.weights)
        weights.update(
            {(u + a.n, v + a.n): w for (u, v), w in b.weights.items()}
        )
        for u, v, s in joined.edges:
            weights.setdefault((u, v), Fraction(-1))
        built = WeightedSignedGraph(joined, weights)
        comment = f"negative join of {args.args[0]} and {args.args[1]}"
    else:  # witness
        k, a_val, b_val = (int(x) for x in args.args)
        built = build_lattice_witness(k, a_val, b_val)
        comment = f"lattice witness k={k} a={a_val} b={b_val}"
    text = format_graph(built, comment=comment)
    if args.out:
        Path(args.out).write_text(text)
    return {
        "command": f"construct {args.kind}",
        "graph": _graph_summary(built),
        "out": args.out,
        "graph_file": text,
    }


_CONSTRUCT_ARITY = {"dot": 4, "join": 2, "witness": 3}


# -- text rendering ------------------------------------------------------------


def _summary_lines(report: dict) -> list[str]:
    g = report["graph"]
    return [
        f"n={g['n']}  m+={g['m_plus']}  m-={g['m_minus']}  "
        f"c={g['c']}  c+={g['c_plus']}  c-={g['c_minus']}  tau={g['tau']}"
    ]


def _iv_str(iv: list[int]) -> str:
    return f"({iv[0]},{iv[1]},{iv[2]})"


def render_text(report: dict) -> str:
    cmd = report["command"]
    lines = [f"[{cmd}]"] + _summary_lines(report)
    if cmd == "info":
        ui = report["unique_inertia"]
        lines.append(
            "unique inertia: " + (_iv_str(ui) if ui else "not unique")
        )
        lines.append(f"lattice capacity: {report['lattice_capacity']}")
    elif cmd == "inertia":
        if report["t"] is not None:
            lines.append(f"t = {report['t']}")
        lines.append(f"inertia: {_iv_str(report['inertia'])}")
    elif cmd == "crossing":
        if "forest" in report:
            f = report["forest"]
            terms = ", ".join(f"a_{k}={v}" for k, v in f["a"].items())
            lines.append(f"forest method: k in [{f['k_min']},{f['k_max']}], {terms}")
            lines.append(f"M(t) coefficients (low to high): {f['polynomial']}")
        if "charpoly" in report:
            lines.append(
                f"char-poly method coefficients: {report['charpoly']['polynomial']}"
            )
        if "agreement" in report:
            a = report["agreement"]
            lines.append(
                f"methods agree up to constant: {a['proportional']}"
                + (f" (ratio {a['ratio']})" if a["ratio"] else "")
            )
    elif cmd == "sweep":
        for c in report["crossings"]:
            root = c["rational_root"]
            lines.append(
                f"crossing in ({c['interval'][0]}, {c['interval'][1]}) "
                f"multiplicity {c['multiplicity']}"
                + (f" at t={root}" if root else "")
            )
        for p in report["trajectory"]:
            seg = p["segment"]
            where = f"t={p['t']}" + (" (on crossing)" if p["on_crossing"] else "")
            hi = seg[1] if seg[1] is not None else "inf"
            lines.append(
                f"{where}: inertia {_iv_str(p['inertia'])} "
                f"[segment ({seg[0]}, {hi})]"
            )
        for key in ("plot", "csv"):
            if report.get(key):
                lines.append(f"{key} written to {report[key]}")
    elif cmd == "unique":
        lines.append(
            "unique: " + (_iv_str(report["inertia"]) if report["unique"] else "no")
        )
    elif cmd == "blocks":
        for i, b in enumerate(report["blocks"], start=1):
            lines.append(
                f"block {i}: vertices {b['vertices']} "
                f"({len(b['edges'])} edges, {b['sign']})"
            )
    elif cmd == "explore":
        lines.append(
            f"achieved {report['count']} inertias "
            f"(capacity {report['lattice_capacity']}, "
            f"budget used {report['evaluations_used']}/{report['budget']})"
        )
        if report["excluded_by_rank"]:
            lines.append(
                "excluded by rank: "
                + " ".join(_iv_str(e) for e in report["excluded_by_rank"])
            )
        for item in report["achieved"]:
            lines.append(
                f"  {_iv_str(item['inertia'])} at t={item['witness']['t']}"
            )
        if report.get("lattice"):
            lines.append(f"lattice plot written to {report['lattice']}")
    elif cmd == "perturb":
        lines.append(
            f"eps = {report['eps']}, Frobenius distance^2 = "
            f"{report['distance_squared']}"
        )
        for edge, w in report["weights"].items():
            lines.append(f"  {edge} {w}")
        if report.get("out"):
            lines.append(f"written to {report['out']}")
    elif cmd == "bounds":
        lines.append(f"n+ in {report['n_plus']}")
        lines.append(f"n- in {report['n_minus']}")
        lines.append(f"n0 in {report['n_zero']}")
        lines.append(f"lattice capacity: {report['lattice_capacity']}")
        if report["vertex_count_capacity"] is not None:
            lines.append(
                f"vertex-count capacity: {report['vertex_count_capacity']}"
            )
        if report["excluded_by_rank"]:
            lines.append(
                "excluded by rank: "
                + " ".join(_iv_str(e) for e in report["excluded_by_rank"])
            )
    elif cmd.startswith("construct"):
        if report.get("out"):
            lines.append(f"written to {report['out']}")
        else:
            lines.append(report["graph_file"].rstrip("\n"))
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-inertia",
        description=(
            "Exact Laplacian inertia analysis for weighted signed graphs."
        ),
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("info", _cmd_info, "graph summary")
    p.add_argument("graph")

    p = add("inertia", _cmd_inertia, "exact Laplacian inertia")
    p.add_argument("graph")
    p.add_argument("--t", help="evaluate the family at rational t > 0")

    p = add("crossing", _cmd_crossing, "crossing polynomial")
    p.add_argument("graph")
    p.add_argument(
        "--method", choices=("forest", "charpoly", "both"), default="forest"
    )

    p = add("sweep", _cmd_sweep, "exact inertia trajectory over t")
    p.add_argument("graph")
    p.add_argument("--plot", help="write eigenvalue-curve SVG here")
    p.add_argument("--csv", help="write sweep CSV here")

    p = add("unique", _cmd_unique, "unique-inertia test")
    p.add_argument("graph")

    p = add("blocks", _cmd_blocks, "biconnected components")
    p.add_argument("graph")

    p = add("explore", _cmd_explore, "search achievable inertias")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lattice", help="write lattice SVG here")

    p = add("perturb", _cmd_perturb, "perturb to a simple spectrum")
    p.add_argument("graph")
    p.add_argument("--eps", required=True, help="rational distance bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the perturbed graph file here")

    p = add("construct", _cmd_construct, "build dot/join/witness graphs")
    p.add_argument("kind", choices=("dot", "join", "witness"))
    p.add_argument("args", nargs="*")
    p.add_argument("--out", help="write the graph file here")

    p = add("bounds", _cmd_bounds, "inertia bounds and capacities")
    p.add_argument("graph")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    worker_cap()  # validate the optional env var early
    if args.cmd == "construct":
        expected = _CONSTRUCT_ARITY[args.kind]
        if len(args.args) != expected:
            print(
                f"construct {args.kind} takes {expected} arguments",
                file=sys.stderr,
            )
            return 3
    try:
        report = args.handler(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_text(report), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
