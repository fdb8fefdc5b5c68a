"""Named graph families used across tests, demos, and the CLI construct
command.  The mixed triangle and chains of it live in sgraph."""

from __future__ import annotations

from .ratpoly import _to_fraction
from .sgraph import SignedGraph, WeightedSignedGraph, negative_join


def positive_clique(p: int) -> SignedGraph:
    edges = [
        (u, v, 1) for u in range(1, p + 1) for v in range(u + 1, p + 1)
    ]
    return SignedGraph.from_edges(p, edges)


def clique_negative_join(p: int, q: int) -> SignedGraph:
    """Two all-positive cliques joined by all-negative cross edges."""
    return negative_join(positive_clique(p), positive_clique(q))


def four_cycle(a, b, c, d) -> WeightedSignedGraph:
    """Weighted 4-cycle 1-2-3-4-1: three positive weights and d < 0 on
    the closing edge {1,4}."""
    a, b, c, d = map(_to_fraction, (a, b, c, d))
    if not (a > 0 and b > 0 and c > 0 and d < 0):
        raise ValueError("need a, b, c > 0 and d < 0")
    return WeightedSignedGraph.from_weighted_edges(
        4, [(1, 2, a), (2, 3, b), (3, 4, c), (1, 4, d)]
    )


def full_flexibility_k4() -> SignedGraph:
    """The complete 4-vertex graph whose positive edges form a spanning
    path and whose negative edges form the complementary path; the unique
    4-vertex signed graph (up to isomorphism) with full flexibility 3."""
    return SignedGraph.from_edges(
        4,
        [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 3, -1), (1, 4, -1), (2, 4, -1)],
    )


def signed_path(signs) -> SignedGraph:
    """Path 1-2-...-(k+1) with the given edge signs."""
    return SignedGraph.from_edges(
        len(signs) + 1,
        [(i, i + 1, 1 if s > 0 else -1) for i, s in enumerate(signs, start=1)],
    )


def signed_star(signs) -> SignedGraph:
    """Star with centre 1 and one leaf per sign."""
    return SignedGraph.from_edges(
        len(signs) + 1,
        [(1, i + 2, 1 if s > 0 else -1) for i, s in enumerate(signs)],
    )
