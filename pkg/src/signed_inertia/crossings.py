"""The crossing polynomial of a weighted signed graph, two ways, and the
exact inertia trajectory as the negative weights are dialled up.

Write a weighting's one-parameter family by multiplying every negative
weight by t > 0.  The crossing polynomial has coefficient a_k equal to the
summed absolute weight-products of the maximal spanning forests with
exactly k negative edges, signed as sum a_k (-t)^k; its positive zeros are
exactly the parameter values where Laplacian eigenvalues cross zero, with
matching multiplicities, and there are tau = n + c - c_plus - c_minus of
them counted with multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import CapExceededError
from .laplacian import char_poly, inertia, weighted_laplacian
from .ratpoly import (
    Inertia,
    RationalPolynomial,
    isolate_positive_roots,
    rational_root_in,
)
from .sgraph import WeightedSignedGraph, at_parameter, component_profile

FOREST_ENUMERATION_CAP = 2_000_000


@dataclass(frozen=True)
class CrossingPolynomial:
    """Forest-sum form: nonnegative a_k for k in [k_min, k_max]."""

    k_min: int
    k_max: int
    a: dict

    def coefficient(self, k: int) -> Fraction:
        return self.a.get(k, Fraction(0))

    def to_polynomial(self) -> RationalPolynomial:
        """Expand sum a_k (-t)^k into a plain polynomial in t."""
        coeffs = [Fraction(0)] * (self.k_max + 1)
        for k, val in self.a.items():
            coeffs[k] = val if k % 2 == 0 else -val
        return RationalPolynomial(coeffs)


class CrossingProfile(NamedTuple):
    crossings: list  # [((lo, hi), multiplicity), ...] sorted ascending
    tau: int


class SweepPoint(NamedTuple):
    t: Fraction
    inertia: Inertia
    segment: tuple  # rational bracket (lo, hi); hi is None past the last crossing
    on_crossing: bool


def _forest_accumulate(wg: WeightedSignedGraph, split_edge=None):
    """Enumerate maximal spanning forests, bucketing by negative-edge count.

    Returns ``buckets`` mapping k -> summed |weight product|.  When
    ``split_edge`` is given, returns ``(without, with_)`` buckets instead,
    where forests through that edge contribute their product *divided by*
    the edge's weight magnitude.
    """
    g = wg.graph
    prof = component_profile(g)
    target = g.n - prof.c
    edges = wg.weighted_edges()
    if math.comb(g.m, target) > FOREST_ENUMERATION_CAP:
        raise CapExceededError(
            "forest enumeration cap exceeded; use crossing_poly_charpoly"
        )
    special = None
    if split_edge is not None:
        key = (min(split_edge), max(split_edge))
        special = next(
            i for i, (u, v, _) in enumerate(edges) if (u, v) == key
        )

    parent = list(range(g.n + 1))
    size = [1] * (g.n + 1)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    plain: dict = {}
    with_special: dict = {}
    m = len(edges)

    def record(buckets: dict, k: int, value: Fraction) -> None:
        buckets[k] = buckets.get(k, Fraction(0)) + value

    def rec(idx: int, chosen: int, neg: int, product: Fraction, has_special: bool):
        if chosen == target:
            record(with_special if has_special else plain, neg, product)
            return
        if m - idx < target - chosen:
            return
        u, v, w = edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            factor = Fraction(1) if idx == special else abs(w)
            rec(
                idx + 1,
                chosen + 1,
                neg + (1 if w < 0 else 0),
                product * factor,
                has_special or idx == special,
            )
            parent[rv] = rv
            size[ru] -= size[rv]
        rec(idx + 1, chosen, neg, product, has_special)

    rec(0, 0, 0, Fraction(1), False)
    if split_edge is None:
        return plain
    return plain, with_special


def crossing_poly_forest(wg: WeightedSignedGraph) -> CrossingPolynomial:
    """Crossing polynomial by direct maximal-spanning-forest enumeration.

    Acyclic subsets are grown edge by edge with a rollback union-find; the
    subset count C(m, n - c) is capped, beyond which the interpolation
    method must be used.
    """
    prof = component_profile(wg.graph)
    buckets = _forest_accumulate(wg)
    k_min = prof.c_plus - prof.c
    k_max = wg.n - prof.c_minus
    for k in buckets:
        assert k_min <= k <= k_max, "forest bucket outside predicted support"
    assert buckets.get(k_min, 0) > 0 and buckets.get(k_max, 0) > 0
    return CrossingPolynomial(k_min, k_max, buckets)


def crossing_poly_edge_split(
    wg: WeightedSignedGraph, u: int, v: int
) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Split M(t) = P(t) + |w_uv| Q(t) around one edge's weight magnitude.

    P collects the forests avoiding the edge, Q the forests through it with
    the edge's own magnitude divided out, so the pair stays valid for any
    consistent reweighting of that single edge.
    """
    plain, with_special = _forest_accumulate(wg, split_edge=(u, v))

    def expand(buckets: dict) -> RationalPolynomial:
        if not buckets:
            return RationalPolynomial.zero()
        coeffs = [Fraction(0)] * (max(buckets) + 1)
        for k, val in buckets.items():
            coeffs[k] = val if k % 2 == 0 else -val
        return RationalPolynomial(coeffs)

    return expand(plain), expand(with_special)


def crossing_poly_charpoly(wg: WeightedSignedGraph) -> RationalPolynomial:
    """Crossing polynomial, up to a nonzero constant, via interpolation.

    The coefficient of lambda^c in the characteristic polynomial of the
    family's Laplacian is a polynomial in t proportional to the forest-sum
    form; it is recovered exactly from k_max + 1 rational sample points.
    """
    prof = component_profile(wg.graph)
    c = prof.c
    k_max = wg.n - prof.c_minus
    nodes = [Fraction(j) for j in range(1, k_max + 2)]
    values = []
    for t in nodes:
        p = char_poly(weighted_laplacian(at_parameter(wg, t)))
        values.append(p.coeffs[c] if c <= p.degree else Fraction(0))
    # exact Lagrange interpolation
    result = RationalPolynomial.zero()
    for j, (tj, yj) in enumerate(zip(nodes, values)):
        if yj == 0:
            continue
        basis = RationalPolynomial.one()
        denom = Fraction(1)
        for i, ti in enumerate(nodes):
            if i == j:
                continue
            basis = basis * RationalPolynomial((-ti, 1))
            denom *= tj - ti
        result = result + basis * (yj / denom)
    return result


def _profile_from_polynomial(
    poly: RationalPolynomial, prof
) -> CrossingProfile:
    crossings = isolate_positive_roots(poly)
    total = sum(mult for _, mult in crossings)
    if total != prof.tau:
        raise RuntimeError(
            f"crossing count {total} disagrees with flexibility {prof.tau}; "
            "this indicates an arithmetic bug"
        )
    return CrossingProfile(crossings, prof.tau)


def crossing_profile(wg: WeightedSignedGraph) -> CrossingProfile:
    """Isolated positive zeros of the crossing polynomial, with
    multiplicities; their total always equals the flexibility."""
    poly, prof = _crossing_polynomial_any(wg)
    return _profile_from_polynomial(poly, prof)


def _crossing_polynomial_any(wg: WeightedSignedGraph):
    prof = component_profile(wg.graph)
    try:
        poly = crossing_poly_forest(wg).to_polynomial()
    except CapExceededError:
        poly = crossing_poly_charpoly(wg)
    return poly, prof


def inertia_sweep(
    wg: WeightedSignedGraph, limit: Optional[int] = None
) -> list[SweepPoint]:
    """Exact inertia at one rational sample inside every segment between
    crossings, plus the on-crossing inertia wherever a crossing point is
    itself rational.

    Between crossings the inertia is constant; sample points are midpoints
    of consecutive isolation-interval endpoints (half the first left
    endpoint before the first crossing, one past the last right endpoint
    after the final one).  ``limit`` truncates the number of exact
    evaluations.
    """
    poly, prof = _crossing_polynomial_any(wg)
    profile = _profile_from_polynomial(poly, prof)
    plan: list[tuple[Fraction, tuple, bool]] = []
    if not profile.crossings:
        plan.append((Fraction(1), (Fraction(0), None), False))
    else:
        prev_hi = Fraction(0)
        for i, ((lo, hi), _mult) in enumerate(profile.crossings):
            sample = lo / 2 if i == 0 else (prev_hi + lo) / 2
            plan.append((sample, (prev_hi, lo), False))
            root = rational_root_in(poly, lo, hi)
            if root is not None:
                plan.append((root, (lo, hi), True))
            prev_hi = hi
        plan.append((prev_hi + 1, (prev_hi, None), False))
    if limit is not None:
        plan = plan[:limit]
    return [
        SweepPoint(t, inertia(at_parameter(wg, t)), segment, on_cross)
        for t, segment, on_cross in plan
    ]
