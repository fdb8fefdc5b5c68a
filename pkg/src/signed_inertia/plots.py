"""Standalone SVG renderings (inertia lattice, eigenvalue curves) and the
sweep CSV.  Floats appear here only; nothing downstream consumes them."""

from __future__ import annotations

from fractions import Fraction

from .crossings import SweepPoint, crossing_profile
from .explorer import InertiaSet
from .laplacian import eigenvalues_float
from .sgraph import WeightedSignedGraph, at_parameter


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def svg_lattice(result: InertiaSet, title: str = "") -> str:
    """Lattice of (n_plus, n_minus) pairs: achieved points filled, rank-
    excluded points hollow, other bound-feasible points light gray."""
    from .explorer import feasible_inertias

    feasible = feasible_inertias(result.graph)
    achieved = {(iv.n_plus, iv.n_minus) for iv in result.achieved}
    excluded = {(iv.n_plus, iv.n_minus) for iv in result.excluded}
    points = {(iv.n_plus, iv.n_minus) for iv in feasible} | achieved | excluded
    xs = [p for p, _ in points] or [0]
    ys = [m for _, m in points] or [0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    cell = 40
    pad = 60
    width = pad * 2 + cell * max(x_hi - x_lo, 1)
    height = pad * 2 + cell * max(y_hi - y_lo, 1)

    def px(p: int) -> float:
        return pad + (p - x_lo) * cell

    def py(m: int) -> float:
        return height - pad - (m - y_lo) * cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width/2}" y="20" text-anchor="middle" '
            f'font-size="14">{title}</text>'
        )
    # bound rectangle
    bx0, bx1 = px(result.bounds.n_plus.lo), px(result.bounds.n_plus.hi)
    by0, by1 = py(result.bounds.n_minus.hi), py(result.bounds.n_minus.lo)
    parts.append(
        f'<rect x="{_fmt(bx0-12)}" y="{_fmt(by0-12)}" '
        f'width="{_fmt(bx1-bx0+24)}" height="{_fmt(by1-by0+24)}" '
        'fill="none" stroke="#bbbbbb" stroke-dasharray="4 3"/>'
    )
    # axes
    parts.append(
        f'<line x1="{pad-30}" y1="{py(y_lo)}" x2="{width-10}" y2="{py(y_lo)}" '
        'stroke="black"/>'
    )
    parts.append(
        f'<line x1="{px(x_lo)}" y1="{height-pad+30}" x2="{px(x_lo)}" y2="10" '
        'stroke="black"/>'
    )
    parts.append(
        f'<text x="{width-10}" y="{py(y_lo)+16}" text-anchor="end" '
        'font-size="12">n+</text>'
    )
    parts.append(
        f'<text x="{px(x_lo)-16}" y="14" font-size="12">n-</text>'
    )
    for p in range(x_lo, x_hi + 1):
        parts.append(
            f'<text x="{px(p)}" y="{py(y_lo)+16}" text-anchor="middle" '
            f'font-size="10">{p}</text>'
        )
    for m in range(y_lo, y_hi + 1):
        parts.append(
            f'<text x="{px(x_lo)-14}" y="{py(m)+4}" text-anchor="middle" '
            f'font-size="10">{m}</text>'
        )
    feasible_pairs = {(iv.n_plus, iv.n_minus) for iv in feasible}
    for p, m in sorted(points):
        x, y = px(p), py(m)
        if (p, m) in achieved:
            parts.append(f'<circle cx="{x}" cy="{y}" r="7" fill="black"/>')
        elif (p, m) in excluded:
            parts.append(
                f'<circle cx="{x}" cy="{y}" r="7" fill="white" '
                'stroke="black" stroke-width="1.5"/>'
            )
        elif (p, m) in feasible_pairs:
            parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#cccccc"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _curve_grid(wg: WeightedSignedGraph) -> list[Fraction]:
    profile = crossing_profile(wg)
    if profile.crossings:
        lo = float(profile.crossings[0][0][0]) / 2
        hi = float(profile.crossings[-1][0][1]) * 2
    else:
        lo, hi = 0.05, 2.0
    lo = max(lo, 1e-6)
    ts = set()
    for i in range(64):
        ts.add(lo * (hi / lo) ** (i / 63))
        ts.add(lo + (hi - lo) * i / 63)
    return sorted(
        Fraction(t).limit_denominator(10**9) for t in ts if t > 0
    )


def svg_curves(wg: WeightedSignedGraph, title: str = "") -> str:
    """Eigenvalues of the family Laplacian against the parameter t."""
    grid = _curve_grid(wg)
    data = [eigenvalues_float(at_parameter(wg, t)) for t in grid]
    n = wg.n
    width, height, pad = 640, 420, 50
    t_lo, t_hi = float(grid[0]), float(grid[-1])
    y_vals = [v for row in data for v in row]
    y_lo, y_hi = min(y_vals), max(y_vals)
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def sx(t: float) -> float:
        return pad + (t - t_lo) / (t_hi - t_lo) * (width - 2 * pad)

    def sy(v: float) -> float:
        return height - pad - (v - y_lo) / (y_hi - y_lo) * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width/2}" y="20" text-anchor="middle" '
            f'font-size="14">{title}</text>'
        )
    if y_lo <= 0 <= y_hi:
        parts.append(
            f'<line x1="{pad}" y1="{_fmt(sy(0))}" x2="{width-pad}" '
            f'y2="{_fmt(sy(0))}" stroke="#999999" stroke-dasharray="5 4"/>'
        )
    parts.append(
        f'<line x1="{pad}" y1="{height-pad}" x2="{width-pad}" '
        f'y2="{height-pad}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{pad}" y1="{height-pad}" x2="{pad}" y2="{pad}" '
        'stroke="black"/>'
    )
    parts.append(
        f'<text x="{width-pad}" y="{height-pad+18}" text-anchor="end" '
        'font-size="12">t</text>'
    )
    colors = [
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    ]
    for i in range(n):
        pts = " ".join(
            f"{_fmt(sx(float(t)))},{_fmt(sy(row[i]))}"
            for t, row in zip(grid, data)
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" '
            f'stroke="{colors[i % len(colors)]}" stroke-width="1.5"/>'
        )
    # crossing markers
    for (lo, hi), mult in crossing_profile(wg).crossings:
        x = sx((float(lo) + float(hi)) / 2)
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(sy(0))}" r="4" fill="none" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(sy(0)-8)}" text-anchor="middle" '
            f'font-size="10">x{mult}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def sweep_csv(wg: WeightedSignedGraph, points: list[SweepPoint]) -> str:
    """One row per exact sweep sample: decimal t, then all float eigenvalues."""
    header = "t," + ",".join(f"lambda_{i}" for i in range(1, wg.n + 1))
    rows = [header]
    for pt in points:
        eigs = eigenvalues_float(at_parameter(wg, pt.t))
        rows.append(
            f"{float(pt.t):.12g}," + ",".join(f"{v:.12g}" for v in eigs)
        )
    return "\n".join(rows) + "\n"
