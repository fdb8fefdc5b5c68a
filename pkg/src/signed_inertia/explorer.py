"""Search for the Laplacian inertias a signed graph achieves.

The search is best-effort but sound: every reported inertia carries a
replayable witness (a consistent weighting plus a rational parameter t),
and exact bounds plus the rank-1 obstruction cut the lattice down before
searching.  Strategies run in a fixed order under an evaluation budget
(one evaluation = one exact inertia computation), so results are
deterministic for a given seed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .crossings import crossing_poly_edge_split, inertia_sweep
from .errors import CapExceededError
from .laplacian import inertia
from .ratpoly import Inertia
from .sgraph import (
    SignedGraph,
    WeightedSignedGraph,
    at_parameter,
    blocks,
    classify_clique_join,
    component_profile,
    reweighted,
    triangle_chain_blocks,
    unit_weighting,
)


class IntRange(NamedTuple):
    lo: int
    hi: int

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


class InertiaBounds(NamedTuple):
    n_plus: IntRange
    n_minus: IntRange
    n_zero: IntRange


class Witness(NamedTuple):
    weighting: WeightedSignedGraph
    t: Fraction

    def replay(self) -> Inertia:
        return inertia(at_parameter(self.weighting, self.t))


def inertia_bounds(g: SignedGraph) -> InertiaBounds:
    """Closed integer ranges every achievable inertia must respect."""
    prof = component_profile(g)
    n = g.n
    return InertiaBounds(
        IntRange(prof.c_plus - prof.c, n - prof.c_minus),
        IntRange(prof.c_minus - prof.c, n - prof.c_plus),
        IntRange(prof.c, n + 2 * prof.c - prof.c_minus - prof.c_plus),
    )


def lattice_capacity(g: SignedGraph) -> int:
    """At most C(tau + 2, 2) distinct inertias are achievable."""
    return math.comb(component_profile(g).tau + 2, 2)


def vertex_count_capacity(n: int) -> int:
    """Vertex-count cap C(n+1, 2) - 3 on the number of inertias, n >= 3."""
    if n < 3:
        raise ValueError("vertex-count capacity is defined for n >= 3")
    return math.comb(n + 1, 2) - 3


def max_flexibility(n: int) -> int:
    """Largest flexibility among signed graphs on n vertices.

    For n >= 4 two edge-disjoint spanning trees of opposite signs exist, so
    the answer is n - 1; below that the (tiny) space of signed graphs is
    exhausted directly.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n >= 4:
        return n - 1
    best = 0
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for assignment in itertools.product((0, 1, -1), repeat=len(pairs)):
        edges = [
            (u, v, s) for (u, v), s in zip(pairs, assignment) if s != 0
        ]
        best = max(best, component_profile(SignedGraph.from_edges(n, edges)).tau)
    return best


def impossibility_by_rank(g: SignedGraph) -> set:
    """Inertias provably unreachable by rank arguments.

    The zero matrix is the only Laplacian with all eigenvalues zero, so a
    graph with any edge excludes (0, 0, n).  A rank-1 Laplacian lives
    entirely on the non-isolated vertices and forces them into the
    two-clique join shape, so graphs whose non-isolated part is not such a
    join also exclude (1, 0, n-1) and (0, 1, n-1).
    """
    out: set = set()
    if g.m == 0:
        return out
    out.add(Inertia(0, 0, g.n))
    touched = sorted({x for u, v, _ in g.edges for x in (u, v)})
    relabel = {v: i + 1 for i, v in enumerate(touched)}
    core = SignedGraph.from_edges(
        len(touched), [(relabel[u], relabel[v], s) for u, v, s in g.edges]
    )
    if classify_clique_join(core) is None:
        out.add(Inertia(1, 0, g.n - 1))
        out.add(Inertia(0, 1, g.n - 1))
    return out


def feasible_inertias(g: SignedGraph) -> list[Inertia]:
    """All lattice points allowed by the bounds (before rank exclusions)."""
    b = inertia_bounds(g)
    n = g.n
    out = []
    for p in range(b.n_plus.lo, b.n_plus.hi + 1):
        for m in range(b.n_minus.lo, b.n_minus.hi + 1):
            z = n - p - m
            if z in b.n_zero:
                out.append(Inertia(p, m, z))
    return out


@dataclass
class InertiaSet:
    """Everything the explorer learned about one signed graph."""

    graph: SignedGraph
    achieved: dict  # Inertia -> Witness
    bounds: InertiaBounds
    lattice_capacity: int
    excluded: set = field(default_factory=set)
    evaluations_used: int = 0

    def inertias(self) -> list[Inertia]:
        return sorted(self.achieved)

    def verify_witnesses(self) -> bool:
        return all(w.replay() == iv for iv, w in self.achieved.items())


def _sign_component_edge_groups(g: SignedGraph, sign_val: int) -> list[list]:
    edges = [(u, v) for u, v, s in g.edges if s == sign_val]
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict = {}
    for u, v in edges:
        groups.setdefault(find(u), []).append((u, v))
    return [sorted(v) for _, v in sorted(groups.items())]


_PIN_TARGETS = [
    Fraction(1),
    Fraction(2),
    Fraction(1, 2),
    Fraction(3),
    Fraction(3, 2),
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(4),
    Fraction(5, 2),
    Fraction(1, 4),
    Fraction(5, 3),
    Fraction(3, 4),
]


def _block_subgraph(g: SignedGraph, block) -> tuple[WeightedSignedGraph, dict]:
    verts = sorted(block.vertices)
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v], s) for u, v, s in block.edges]
    sub = SignedGraph.from_edges(len(verts), edges)
    back = {(relabel[u], relabel[v]): (u, v) for u, v, _ in block.edges}
    return unit_weighting(sub), back


def _pin_solutions(g: SignedGraph) -> dict:
    """Single-edge reweightings that place a block crossing on a rational.

    The crossing polynomial is affine in any one edge magnitude and factors
    over blocks, so each pin is solved inside its own block and stays valid
    in any combination across distinct blocks.  Solving on bases whose
    negative weights are pre-scaled gives, per (block, target), several
    solutions whose remaining crossings sit on different sides of the
    target; mixing those across blocks varies where an aligned crossing
    lands in the overall order.
    """
    pins: dict = {}  # (block_index, sigma) -> [ {edge: weight}, ... ]
    base_scales = (Fraction(1), Fraction(4), Fraction(1, 4))
    for bi, block in enumerate(blocks(g)):
        signs = {s for _, _, s in block.edges}
        if len(signs) < 2:
            continue  # single-sign blocks never cross
        sub, back = _block_subgraph(g, block)
        for scale_r in base_scales:
            scaled = WeightedSignedGraph(
                sub.graph,
                {
                    k: (w * scale_r if w < 0 else w)
                    for k, w in sub.weights.items()
                },
            )
            splits = [
                (u, v, s, *crossing_poly_edge_split(scaled, u, v))
                for u, v, s in scaled.graph.edges
            ]
            for sigma in _PIN_TARGETS:
                solutions = pins.setdefault((bi, sigma), [])
                if len(solutions) >= len(base_scales):
                    continue
                for u, v, s, p_part, q_part in splits:
                    qs = q_part(sigma)
                    if qs == 0:
                        continue
                    mag = -p_part(sigma) / qs
                    if mag <= 0:
                        continue
                    changes = {
                        back[(a, b)]: w
                        for (a, b), w in scaled.weights.items()
                        if w < 0
                    }
                    changes[back[(u, v)]] = mag * s
                    solutions.append(changes)
                    break
    return {k: v for k, v in pins.items() if v}


def explore(g: SignedGraph, budget: int = 5000, seed: int = 0) -> InertiaSet:
    """Collect achievable inertias with replayable witnesses.

    Runs, in order and under the shared evaluation budget: the all-unit
    sweep; per-block negative rescalings; the exact chained-triangle
    witness weightings when the graph is such a chain; single-edge and
    sign-component multiplier enumerations; single- and multi-block
    rational crossing pins; then seeded random weightings.  The result is
    a sound lower bound on the achievable set and stops early once every
    bound-feasible, non-excluded lattice point is witnessed.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    bounds = inertia_bounds(g)
    capacity = lattice_capacity(g)
    excluded = impossibility_by_rank(g)
    feasible = set(feasible_inertias(g)) - excluded
    achieved: dict = {}
    state = {"left": budget}
    tried: set = set()

    def complete() -> bool:
        return state["left"] <= 0 or len(achieved) >= len(feasible)

    def sweep(wg: WeightedSignedGraph) -> bool:
        """Run one weighting; False once the whole search should stop."""
        if complete():
            return False
        key = wg.canonical_key()
        if key in tried:
            return True
        tried.add(key)
        try:
            points = inertia_sweep(wg, limit=state["left"])
        except CapExceededError:
            return True
        state["left"] -= len(points)
        for pt in points:
            achieved.setdefault(pt.inertia, Witness(wg, pt.t))
        return not complete()

    base = unit_weighting(g)
    running = g.m == 0 or sweep(base)
    if g.m == 0 and state["left"] > 0:
        achieved.setdefault(inertia(base), Witness(base, Fraction(1)))
        state["left"] -= 1
        running = False

    # per-block negative rescalings
    if running:
        neg_blocks = [
            b for b in blocks(g) if any(s < 0 for _, _, s in b.edges)
        ]
        if neg_blocks:
            values = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4))
            combos = itertools.islice(
                itertools.product(values, repeat=len(neg_blocks)), 625
            )
            for combo in combos:
                if all(r == 1 for r in combo):
                    continue
                changes = {}
                for block, r in zip(neg_blocks, combo):
                    for u, v, s in block.edges:
                        if s < 0:
                            changes[(u, v)] = -r
                if not sweep(reweighted(base, changes)):
                    running = False
                    break

    # exact witnesses for chained mixed triangles
    if running:
        chain = triangle_chain_blocks(g)
        if chain is not None:
            k = len(chain)
            for a in range(k):
                for b in range(k - a):
                    r_star = Fraction(4, 2 * a + 1)
                    scalings = [Fraction(2, i) for i in range(1, a + 1)]
                    scalings.extend([r_star] * (k - a - b))
                    scalings.extend(
                        Fraction(2, i) for i in range(a + 1, a + b + 1)
                    )
                    changes = {}
                    for block, r in zip(chain, scalings):
                        for u, v, s in block.edges:
                            if s < 0:
                                changes[(u, v)] = -r
                    if not sweep(reweighted(base, changes)):
                        running = False
                        break
                if not running:
                    break

    # single-edge multipliers
    if running:
        for u, v, s in g.edges:
            for mu in (Fraction(2), Fraction(1, 2)):
                if not sweep(reweighted(base, {(u, v): s * mu})):
                    running = False
                    break
            if not running:
                break

    # whole sign-component multipliers, then pairs inside small components
    if running:
        groups = _sign_component_edge_groups(g, 1) + _sign_component_edge_groups(g, -1)
        sign_of = {(u, v): s for u, v, s in g.edges}
        for group in groups:
            if len(group) < 2 or not running:
                continue
            for mu in (Fraction(2), Fraction(1, 2)):
                changes = {e: sign_of[e] * mu for e in group}
                if not sweep(reweighted(base, changes)):
                    running = False
                    break
        for group in groups:
            if len(group) < 2 or len(group) > 6 or not running:
                continue
            for e1, e2 in itertools.combinations(group, 2):
                for m1, m2 in (
                    (Fraction(2), Fraction(1, 2)),
                    (Fraction(1, 2), Fraction(2)),
                    (Fraction(2), Fraction(2)),
                    (Fraction(1, 2), Fraction(1, 2)),
                ):
                    changes = {e1: sign_of[e1] * m1, e2: sign_of[e2] * m2}
                    if not sweep(reweighted(base, changes)):
                        running = False
                        break
                if not running:
                    break

    # rational crossing pins: single blocks, aligned blocks, mixed pairs
    if running:
        pins = _pin_solutions(g)
        for key in sorted(pins, key=lambda k: (k[0], k[1])):
            for solution in pins[key]:
                if not sweep(reweighted(base, solution)):
                    running = False
                    break
            if not running:
                break
        if running:
            block_ids = sorted({bi for bi, _ in pins})
            for sigma in _PIN_TARGETS:
                at_sigma = [bi for bi in block_ids if (bi, sigma) in pins]
                if len(at_sigma) < 2:
                    continue
                # aligned pins stack crossings; mixing solution choices
                # varies where the stacked crossing sits among the others
                for b1, b2 in itertools.combinations(at_sigma, 2):
                    for s1 in pins[(b1, sigma)]:
                        for s2 in pins[(b2, sigma)]:
                            merged = dict(s1)
                            merged.update(s2)
                            if not sweep(reweighted(base, merged)):
                                running = False
                                break
                        if not running:
                            break
                    if not running:
                        break
                if running and len(at_sigma) > 2:
                    merged = {}
                    for bi in at_sigma:
                        merged.update(pins[(bi, sigma)][0])
                    if not sweep(reweighted(base, merged)):
                        running = False
                if not running:
                    break
        if running and len({bi for bi, _ in pins}) >= 2:
            cross = [
                (k1, k2)
                for k1, k2 in itertools.combinations(sorted(pins), 2)
                if k1[0] != k2[0] and k1[1] != k2[1]
            ]
            for k1, k2 in cross[:80]:
                merged = dict(pins[k1][0])
                merged.update(pins[k2][0])
                if not sweep(reweighted(base, merged)):
                    running = False
                    break

    # seeded random weightings
    if running and g.m > 0:
        rng = random.Random(seed)
        palette = [
            Fraction(2),
            Fraction(1, 2),
            Fraction(3),
            Fraction(1, 3),
            Fraction(3, 2),
            Fraction(2, 3),
            Fraction(4),
            Fraction(1, 4),
        ]
        edges = [(u, v) for u, v, _ in g.edges]
        sign_of = {(u, v): s for u, v, s in g.edges}
        for draw in range(100_000):
            if not running:
                break
            if draw % 4 == 3:
                changes = {
                    e: sign_of[e] * Fraction(rng.randint(1, 8), rng.randint(1, 8))
                    for e in edges
                }
            else:
                size = rng.randint(1, min(4, len(edges)))
                subset = rng.sample(edges, size)
                if rng.random() < 0.5:
                    mu = rng.choice(palette)
                    changes = {e: sign_of[e] * mu for e in subset}
                else:
                    changes = {
                        e: sign_of[e] * rng.choice(palette[:4]) for e in subset
                    }
            running = sweep(reweighted(base, changes))

    return InertiaSet(
        graph=g,
        achieved=achieved,
        bounds=bounds,
        lattice_capacity=capacity,
        excluded=excluded,
        evaluations_used=budget - state["left"],
    )


class MinkowskiReport(NamedTuple):
    ok: bool
    pairs_left: set
    pairs_right: set
    dot_pairs: dict  # (va, vb) -> set of (n_plus, n_minus)
    violations: list
    unexplained: list  # dot pairs outside the sumset of *explored* pairs


def minkowski_check(
    w1: WeightedSignedGraph,
    w2: WeightedSignedGraph,
    budget: int = 2000,
    seed: int = 0,
) -> MinkowskiReport:
    """Check dot-product inertia pairs against the component sumset.

    Every explored (n_plus, n_minus) pair of a one-vertex identification
    must lie in the Minkowski sum of the two components' bound-feasible
    pair sets; an actual violation would indicate an arithmetic bug, since
    the component explorations are only lower bounds.  Pairs outside the
    sumset of the *explored* component pairs are reported separately as
    unexplained, not as violations.
    """
    from .sgraph import dot

    left = explore(w1.graph, budget, seed)
    right = explore(w2.graph, budget, seed + 1)
    explored_left = {(iv.n_plus, iv.n_minus) for iv in left.achieved}
    explored_right = {(iv.n_plus, iv.n_minus) for iv in right.achieved}
    bound_left = {(iv.n_plus, iv.n_minus) for iv in feasible_inertias(w1.graph)}
    bound_right = {(iv.n_plus, iv.n_minus) for iv in feasible_inertias(w2.graph)}
    bound_sumset = {
        (a1 + a2, b1 + b2) for a1, b1 in bound_left for a2, b2 in bound_right
    }
    explored_sumset = {
        (a1 + a2, b1 + b2)
        for a1, b1 in explored_left
        for a2, b2 in explored_right
    }
    dot_pairs: dict = {}
    violations: list = []
    unexplained: list = []
    for va in range(1, w1.n + 1):
        for vb in range(1, w2.n + 1):
            merged = dot(w1, va, w2, vb)
            found = explore(merged.graph, budget, seed + 17 * va + vb)
            pairs = {(iv.n_plus, iv.n_minus) for iv in found.achieved}
            dot_pairs[(va, vb)] = pairs
            for pair in sorted(pairs):
                if pair not in bound_sumset:
                    violations.append(((va, vb), pair))
                elif pair not in explored_sumset:
                    unexplained.append(((va, vb), pair))
    return MinkowskiReport(
        ok=not violations,
        pairs_left=explored_left,
        pairs_right=explored_right,
        dot_pairs=dot_pairs,
        violations=violations,
        unexplained=unexplained,
    )
