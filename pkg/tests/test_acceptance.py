"""Acceptance suite.

Each test covers one numbered criterion, checks it at its stated tolerance
(exact equality unless a float threshold is given), and prints one
PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import random
from fractions import Fraction as F

import pytest

from generators import (
    brute_force_mixed_cycle,
    random_forest,
    random_rational,
    random_signed_graph,
    random_weighting,
)
from signed_inertia import (
    Inertia,
    RationalPolynomial,
    SignedGraph,
    WeightedSignedGraph,
    at_parameter,
    build_lattice_witness,
    component_profile,
    crossing_poly_charpoly,
    crossing_poly_forest,
    crossing_profile,
    dot,
    eigenvalues_float,
    explore,
    feasible_inertias,
    frobenius_distance_squared,
    impossibility_by_rank,
    inertia,
    inertia_bounds,
    inertia_sweep,
    is_simple_spectrum,
    mixed_triangle,
    negative_join,
    perturb_simple,
    reweighted,
    scale,
    scale_negative,
    triangle_chain,
    unique_inertia,
    unit_weighting,
    weighted_laplacian,
)
from signed_inertia.families import (
    clique_negative_join,
    four_cycle,
    full_flexibility_k4,
    positive_clique,
    signed_star,
)

T = RationalPolynomial.variable()


def report(number: int, name: str) -> None:
    print(f"ACCEPTANCE {number} ({name}): PASS")


def forest_poly(wg: WeightedSignedGraph) -> RationalPolynomial:
    return crossing_poly_forest(wg).to_polynomial()


def hexagon_weightings() -> dict:
    base = unit_weighting(clique_negative_join(3, 3))
    return {
        "staggered": reweighted(base, {(1, 2): 2, (1, 3): 2, (4, 5): 2}),
        "one_clique_doubled": reweighted(base, {(1, 2): 2, (1, 3): 2, (2, 3): 2}),
        "half_one_two": reweighted(base, {(1, 2): F(1, 2), (2, 3): 2}),
        "one_edge_doubled": reweighted(base, {(1, 2): 2}),
        "one_edge_halved": reweighted(base, {(1, 2): F(1, 2)}),
        "unit": base,
    }


def test_criterion_1_crossing_polynomial_golden_set():
    assert forest_poly(mixed_triangle()) == T**2 - 2 * T

    rng = random.Random(101)
    for _ in range(5):
        a, b, c = (random_rational(rng) for _ in range(3))
        d = -random_rational(rng)
        got = forest_poly(four_cycle(a, b, c, d))
        assert got == RationalPolynomial([a * b * c, d * (b * c + c * a + a * b)])

    assert forest_poly(triangle_chain([1, 1])) == (T * (T - 2)) ** 2
    assert forest_poly(triangle_chain([1, 1, 1])) == (T * (T - 2)) ** 3
    assert forest_poly(triangle_chain([2, 1])) == 2 * T**2 * (2 * T - 2) * (T - 2)
    assert forest_poly(triangle_chain([2, 1, 1])) == 4 * T**3 * (T - 1) * (T - 2) ** 2
    assert forest_poly(triangle_chain([F(1, 2), 1, 1])) == (
        F(1, 4) * T**3 * (T - 4) * (T - 2) ** 2
    )

    hw = hexagon_weightings()
    stated = {
        "staggered": -9 * T * (3 * T - 4) * (3 * T - 5) * (T - 1) * (T - 2),
        "one_clique_doubled": -81 * T * (T - 1) ** 2 * (T - 2) ** 2,
        "half_one_two": F(-27, 2) * T * RationalPolynomial([7, -14, 6]) * (T - 1) ** 2,
        "one_edge_doubled": -27 * T * (3 * T - 5) * (T - 1) ** 3,
        "one_edge_halved": -27 * T * (3 * T - 2) * (T - 1) ** 3,
        "unit": -81 * T * (T - 1) ** 4,
    }
    for name, wg in hw.items():
        got = forest_poly(wg)
        want = stated[name]
        ratio = got.leading / want.leading
        assert ratio > 0 and got == want * ratio, name
        assert ratio == 1  # the forest sum reproduces them on the nose
    report(1, "crossing-polynomial golden set")


def test_criterion_2_inertia_set_reproduction():
    cases = [
        (
            triangle_chain([1, 1]).graph,
            {(2, 2, 1), (3, 1, 1), (4, 0, 1), (2, 1, 2), (3, 0, 2), (2, 0, 3)},
        ),
        (
            triangle_chain([1, 1, 1]).graph,
            {
                (3, 3, 1), (4, 2, 1), (5, 1, 1), (6, 0, 1),
                (3, 2, 2), (4, 1, 2), (5, 0, 2),
                (3, 1, 3), (4, 0, 3), (3, 0, 4),
            },
        ),
    ]
    for g, expected in cases:
        got = {tuple(iv) for iv in explore(g, budget=5000, seed=0).inertias()}
        assert got == expected

    hexagon = clique_negative_join(3, 3)
    result = explore(hexagon, budget=5000, seed=0)
    lattice = {tuple(iv) for iv in feasible_inertias(hexagon)}
    assert len(lattice) == 15
    assert {tuple(iv) for iv in result.inertias()} == lattice

    k4 = full_flexibility_k4()
    excluded = impossibility_by_rank(k4)
    assert excluded == {Inertia(0, 1, 3), Inertia(1, 0, 3), Inertia(0, 0, 4)}
    result = explore(k4, budget=5000, seed=0)
    expected7 = {
        (0, 3, 1), (1, 2, 1), (2, 1, 1), (3, 0, 1),
        (0, 2, 2), (1, 1, 2), (2, 0, 2),
    }
    assert {tuple(iv) for iv in result.inertias()} == expected7
    report(2, "inertia-set reproduction")


def test_criterion_3_flexibility_counts_crossings():
    rng = random.Random(3)
    for _ in range(500):
        g = random_signed_graph(rng, n_max=8)
        wg = random_weighting(rng, g)
        profile = crossing_profile(wg)
        assert sum(m for _, m in profile.crossings) == component_profile(g).tau
    report(3, "tau equals crossing count on 500 random graphs")


def test_criterion_4_method_agreement():
    rng = random.Random(4)
    for _ in range(200):
        wg = random_weighting(rng, random_signed_graph(rng, n_max=8))
        forest = forest_poly(wg)
        interp = crossing_poly_charpoly(wg)
        assert interp.degree == forest.degree
        ratio = interp.leading / forest.leading
        assert ratio != 0
        assert interp == forest * ratio
    report(4, "forest and char-poly methods proportional on 200 graphs")


def test_criterion_5_multiplicativity_and_scaling():
    rng = random.Random(5)
    for _ in range(100):
        a = random_weighting(rng, random_signed_graph(rng, n_max=5))
        b = random_weighting(rng, random_signed_graph(rng, n_max=5))
        va, vb = rng.randint(1, a.n), rng.randint(1, b.n)
        assert forest_poly(dot(a, va, b, vb)) == forest_poly(a) * forest_poly(b)
    for _ in range(100):
        wg = random_weighting(rng, random_signed_graph(rng, n_max=6, connected=True))
        r = random_rational(rng)
        assert forest_poly(scale(wg, r)) == forest_poly(wg) * r ** (wg.n - 1)
    for _ in range(100):
        wg = random_weighting(rng, random_signed_graph(rng, n_max=6))
        r = random_rational(rng)
        assert forest_poly(scale_negative(wg, r)) == forest_poly(wg).compose_scale(r)
    report(5, "multiplicativity and scaling identities, 100 instances each")


def test_criterion_6_inertia_bounds():
    rng = random.Random(6)
    for _ in range(1000):
        g = random_signed_graph(rng, n_max=8, p_edge=rng.choice((0.2, 0.45, 0.7)))
        wg = random_weighting(rng, g)
        iv = inertia(wg)
        b = inertia_bounds(g)
        assert iv.n_plus in b.n_plus
        assert iv.n_minus in b.n_minus
        assert iv.n_zero in b.n_zero
        assert iv.n_zero >= component_profile(g).c
    report(6, "inertia bounds hold on 1000 random weightings")


def test_criterion_7_forest_uniqueness():
    rng = random.Random(7)
    for _ in range(200):
        g = random_forest(rng)
        expected = Inertia(g.m_minus, g.m_plus, g.n - g.m)
        assert unique_inertia(g) == expected
        for _ in range(5):
            assert inertia(random_weighting(rng, g)) == expected
    report(7, "forests have the fixed inertia (m-, m+, n-m)")


CATALOG_N5 = {
    2: [
        [(1, 2)],
    ],
    3: [
        [(1, 2), (2, 3)],
        [(1, 2), (2, 3), (1, 3)],
        [(1, 2)],
    ],
    4: [
        [(1, 2), (2, 3), (3, 4)],
        [(1, 2), (1, 3), (1, 4)],
        [(1, 2), (2, 3), (3, 4), (1, 4)],
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
        [(1, 2), (1, 3), (2, 3), (3, 4)],
        [(1, 2), (1, 3), (2, 3)],
        [(1, 2), (3, 4)],
    ],
    5: [
        [(1, 2), (2, 3), (3, 4), (4, 5)],
        [(1, 2), (1, 3), (1, 4), (1, 5)],
        [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
        [(u, v) for u in range(1, 6) for v in range(u + 1, 6)],
        [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)],
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)],
        [(1, 2), (1, 3), (3, 4), (3, 5)],
        [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)],
        [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        [(1, 2), (1, 3), (2, 3), (4, 5)],
    ],
}


def test_criterion_8_unique_inertia_characterization():
    rng = random.Random(8)
    checked = 0
    for n, graphs in CATALOG_N5.items():
        for pairs in graphs:
            m = len(pairs)
            for mask in range(2**m):
                edges = [
                    (u, v, 1 if (mask >> i) & 1 else -1)
                    for i, (u, v) in enumerate(pairs)
                ]
                g = SignedGraph.from_edges(n, edges)
                ui = unique_inertia(g)
                mixed = brute_force_mixed_cycle(g)
                assert (ui is None) == mixed
                if ui is not None:
                    seen = {inertia(random_weighting(rng, g)) for _ in range(10)}
                    assert seen == {ui}
                else:
                    distinct = {inertia(random_weighting(rng, g)) for _ in range(10)}
                    assert mixed or len(distinct) >= 2
                checked += 1
    assert checked > 1500
    report(8, f"unique-inertia characterization on {checked} signed graphs")


def _degenerate_corpus() -> list[WeightedSignedGraph]:
    def flip(g: SignedGraph) -> SignedGraph:
        return SignedGraph.from_edges(g.n, [(u, v, -s) for u, v, s in g.edges])

    def cycle(n: int) -> SignedGraph:
        return SignedGraph.from_edges(
            n, [(i, i + 1, 1) for i in range(1, n)] + [(1, n, 1)]
        )

    corpus: list[WeightedSignedGraph] = []
    for k in (3, 4, 5, 6, 7):
        corpus.append(unit_weighting(positive_clique(k)))
        corpus.append(unit_weighting(flip(positive_clique(k))))
    for k in (3, 4, 5, 6, 7):
        corpus.append(unit_weighting(signed_star([1] * k)))
        corpus.append(unit_weighting(signed_star([-1] * k)))
    for p, q in ((2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5)):
        corpus.append(
            unit_weighting(
                negative_join(
                    SignedGraph.from_edges(p, []), SignedGraph.from_edges(q, [])
                )
            )
        )
    for p, q in ((1, 3), (1, 4), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)):
        corpus.append(unit_weighting(clique_negative_join(p, q)))
    for n in (4, 5, 6, 7):
        corpus.append(unit_weighting(cycle(n)))
        corpus.append(unit_weighting(flip(cycle(n))))
    for k in (2, 3, 4, 5):
        corpus.append(at_parameter(triangle_chain([1] * k), 2))
    corpus.append(triangle_chain([2, 2]))
    hw = hexagon_weightings()
    corpus.append(hw["unit"])
    corpus.append(hw["one_clique_doubled"])
    corpus.append(hw["one_edge_doubled"])
    corpus.append(hw["one_edge_halved"])
    return corpus[:50]


def test_criterion_9_perturbation():
    corpus = _degenerate_corpus()
    assert len(corpus) == 50
    eps = F(1, 100)
    for wg in corpus:
        assert component_profile(wg.graph).c == 1
        assert not is_simple_spectrum(wg), "corpus entry must be degenerate"
        out = perturb_simple(wg, eps)
        assert out.graph == wg.graph  # same signed graph, consistent weights
        assert is_simple_spectrum(out)
        d2 = frobenius_distance_squared(
            weighted_laplacian(wg), weighted_laplacian(out)
        )
        assert d2 < eps * eps
    report(9, "perturbation to simple spectrum on 50 degenerate graphs")


def test_criterion_10_lattice_witness():
    for k in (1, 2, 3, 4):
        for a in range(k):
            for b in range(k - a):
                w = build_lattice_witness(k, a, b)
                const = F(4 ** (2 * k - a - b))
                const /= (2 * a + 1) ** (2 * (k - a - b))
                expected = const * T**k * (T - F(2 * a + 1, 2)) ** (k - a - b)
                for i in range(1, a + b + 1):
                    expected = expected * (T - i) * F(1, i * i)
                assert forest_poly(w) == expected

                target = Inertia(k + a, b, 1 + k - a - b)
                on_crossing = [
                    tuple(p.inertia) for p in inertia_sweep(w) if p.on_crossing
                ]
                assert tuple(target) in on_crossing
    report(10, "lattice witness roots and target points for k <= 4")


def test_criterion_11_float_exact_agreement():
    corpus: list[WeightedSignedGraph] = [
        mixed_triangle(),
        four_cycle(1, 2, 3, -4),
        triangle_chain([1, 1]),
        triangle_chain([1, 1, 1]),
        triangle_chain([2, 1, 1]),
        triangle_chain([F(1, 2), 1, 1]),
        unit_weighting(full_flexibility_k4()),
        unit_weighting(positive_clique(4)),
        unit_weighting(signed_star([1, -1, 1])),
        WeightedSignedGraph.from_weighted_edges(2, [(1, 2, 1)]),
    ]
    corpus.extend(hexagon_weightings().values())
    for k in (1, 2, 3):
        for a in range(k):
            corpus.append(build_lattice_witness(k, a, 0))
    for wg in list(corpus):
        for t in (F(1, 2), F(2), F(5, 3)):
            corpus.append(at_parameter(wg, t))
    for wg in corpus:
        exact = inertia(wg)
        eigs = eigenvalues_float(wg)
        census = (
            sum(1 for v in eigs if v > 1e-6),
            sum(1 for v in eigs if v < -1e-6),
            sum(1 for v in eigs if abs(v) <= 1e-6),
        )
        assert census == tuple(exact)
    report(11, f"float/exact sign agreement on {len(corpus)} weightings")


def test_criterion_12_doubled_quad_stretch():
    k4 = unit_weighting(full_flexibility_k4())
    doubled = dot(k4, 4, k4, 1)
    result = explore(doubled.graph, budget=20000, seed=0)
    got = {tuple(iv) for iv in result.inertias()}
    expected = {
        (p, m, 7 - p - m)
        for p in range(0, 7)
        for m in range(0, 7)
        if 1 <= 7 - p - m <= 3
    }
    assert len(expected) == 18
    assert got == expected
    assert all(iv.n_zero <= 3 for iv in result.inertias())
    report(12, "doubled full-flexibility quad achieves exactly the 18")
