"""Weighted Laplacians: exact inertia, characteristic polynomials,
spectral-simplicity testing, and the perturbation that makes every
eigenvalue simple.

The sign convention is L = A - D (adjacency minus degree diagonal), so a
graph with only positive edges has a negative semidefinite Laplacian.  All
decisions are exact; floats appear only in :func:`eigenvalues_float`.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as int_gcd

import numpy as np

from ._jacobi import symmetric_eigenvalues
from .errors import CapExceededError
from .ratpoly import (
    Inertia,
    RationalPolynomial,
    _to_fraction,
    is_square_free,
    real_rooted_inertia,
)
from .sgraph import (
    SignedGraph,
    WeightedSignedGraph,
    _component_count,
    component_profile,
)


class SymmetricRationalMatrix:
    """Dense symmetric matrix with exact rational entries (0-based)."""

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        rows = [tuple(_to_fraction(x) for x in row) for row in rows]
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricRationalMatrix is immutable")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.rows]

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricRationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"SymmetricRationalMatrix({[list(map(str, r)) for r in self.rows]})"


def frobenius_distance_squared(
    a: SymmetricRationalMatrix, b: SymmetricRationalMatrix
) -> Fraction:
    if a.order != b.order:
        raise ValueError("matrix orders differ")
    total = Fraction(0)
    for ra, rb in zip(a.rows, b.rows):
        for x, y in zip(ra, rb):
            total += (x - y) ** 2
    return total


def weighted_laplacian(wg: WeightedSignedGraph) -> SymmetricRationalMatrix:
    """L = A - D: edge weights off the diagonal, minus weighted degree on it.

    Every row and column sums to zero.
    """
    n = wg.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, v, w in wg.weighted_edges():
        rows[u - 1][v - 1] = w
        rows[v - 1][u - 1] = w
        rows[u - 1][u - 1] -= w
        rows[v - 1][v - 1] -= w
    return SymmetricRationalMatrix(rows)


def _faddeev(rows, n: int, one, exact_div):
    # det(lambda*I - A) coefficients via the Leverrier recurrence,
    # highest power first; works over Fraction or int with the right divider
    m = [[one if i == j else 0 * one for j in range(n)] for i in range(n)]
    coeffs = [one]
    for k in range(1, n + 1):
        am = [
            [sum(rows[i][l] * m[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        ck = exact_div(-sum(am[i][i] for i in range(n)), k)
        coeffs.append(ck)
        m = [[am[i][j] + (ck if i == j else 0 * one) for j in range(n)] for i in range(n)]
    return coeffs


def _div_fraction(x, k):
    return x / k


def _div_int(x, k):
    q, r = divmod(x, k)
    assert r == 0, "Leverrier division must be exact on integer input"
    return q


def char_poly(matrix: SymmetricRationalMatrix) -> RationalPolynomial:
    """Exact monic characteristic polynomial det(lambda*I - M)."""
    n = matrix.order
    if n == 0:
        return RationalPolynomial.one()
    coeffs = _faddeev(matrix.rows, n, Fraction(1), _div_fraction)
    return RationalPolynomial(reversed(coeffs))


def _integer_char_poly(wg: WeightedSignedGraph) -> RationalPolynomial:
    """Characteristic polynomial of a positively rescaled Laplacian.

    Clearing denominators scales every eigenvalue by the same positive
    constant, which preserves the sign census and all multiplicities, and
    lets the recurrence run on machine-friendly big integers.
    """
    lap = weighted_laplacian(wg)
    n = lap.order
    if n == 0:
        return RationalPolynomial.one()
    den = 1
    for row in lap.rows:
        for x in row:
            den = den * x.denominator // int_gcd(den, x.denominator)
    rows = [[int(x * den) for x in row] for row in lap.rows]
    return RationalPolynomial(reversed(_faddeev(rows, n, 1, _div_int)))


def inertia(wg: WeightedSignedGraph) -> Inertia:
    """Exact (positive, negative, zero) eigenvalue counts of the Laplacian."""
    return real_rooted_inertia(_integer_char_poly(wg))


def is_simple_spectrum(wg: WeightedSignedGraph) -> bool:
    """True iff every Laplacian eigenvalue is simple (square-free test)."""
    return is_square_free(_integer_char_poly(wg))


def eigenvalues_float(wg: WeightedSignedGraph) -> list[float]:
    """All Laplacian eigenvalues as floats, ascending.

    Cyclic Jacobi rotations; for plots and cross-checks only, never for
    exact decisions.
    """
    return [float(x) for x in symmetric_eigenvalues(weighted_laplacian(wg).to_float())]


# -- perturbation to a simple spectrum ----------------------------------------


def _deepest_dfs_path(g: SignedGraph, root: int) -> list[int]:
    # path from the root to the deepest DFS-tree vertex (linear, heuristic)
    adj = {v: sorted(w for w, _ in nb) for v, nb in g.adjacency().items()}
    parent = {root: 0}
    deepest, best_depth = root, 0
    stack = [(root, 0)]
    while stack:
        u, depth = stack.pop()
        if depth > best_depth:
            deepest, best_depth = u, depth
        for w in reversed(adj[u]):
            if w not in parent:
                parent[w] = u
                stack.append((w, depth + 1))
    path = [deepest]
    while path[-1] != root:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _long_path(g: SignedGraph) -> list[int]:
    # double sweep: deepest vertex from 1, then the deepest path from there
    first = _deepest_dfs_path(g, 1)
    return _deepest_dfs_path(g, first[-1])


def _support_subgraph(g: SignedGraph, weights: dict) -> SignedGraph:
    edges = [(u, v, s) for u, v, s in g.edges if (u, v) in weights]
    return SignedGraph.from_edges(g.n, edges)


def _nonzero_spectrum_simple(wg: WeightedSignedGraph, expected_nullity: int) -> bool:
    p = _integer_char_poly(wg)
    census = real_rooted_inertia(p)
    if census.n_zero != expected_nullity:
        return False
    return is_square_free(p.shift_down(census.n_zero))


def perturb_simple(wg: WeightedSignedGraph, eps, seed: int = 0) -> WeightedSignedGraph:
    """Nudge a connected weighting until all Laplacian eigenvalues are simple.

    Returns a consistent weighting of the same signed graph whose Laplacian
    passes the exact square-free test and sits within Frobenius distance
    eps of the input.  Inputs that are already simple come back unchanged.

    Two stages: first a tiny consistent weighting of the whole graph with a
    simple spectrum is grown (a deep path, then pendant attachments, then
    the leftover edges, with geometrically shrinking magnitudes redrawn on
    failure); then ``original + s * tiny`` is searched over s = 1/2, 1/4,
    ... until the exact simplicity test passes.
    """
    eps = _to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    g = wg.graph
    if component_profile(g).c != 1:
        raise ValueError("perturbation requires a connected graph")
    if is_simple_spectrum(wg):
        return wg

    rng = random.Random(seed)
    sign = {(u, v): s for u, v, s in g.edges}
    adj = g.adjacency()

    path = _long_path(g)
    order = [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]
    in_tree = set(path)
    while len(in_tree) < g.n:
        for v in range(1, g.n + 1):
            if v in in_tree:
                continue
            anchors = sorted(u for u, _ in adj[v] if u in in_tree)
            if anchors:
                order.append((min(v, anchors[0]), max(v, anchors[0])))
                in_tree.add(v)
    used = set(order)
    order.extend((u, v) for u, v, _ in g.edges if (u, v) not in used)

    base = eps / 4
    tiny: dict = {}
    for u, v in order:
        for _ in range(64):
            magnitude = base * Fraction(rng.randint(16, 31), 32)
            tiny[(u, v)] = magnitude * sign[(u, v)]
            candidate = WeightedSignedGraph(_support_subgraph(g, tiny), dict(tiny))
            if _nonzero_spectrum_simple(
                candidate, _component_count(g.n, tiny.keys())
            ):
                break
            del tiny[(u, v)]
        else:
            raise CapExceededError(
                f"could not keep the spectrum simple while adding edge {(u, v)}"
            )
        base /= 4

    zero = SymmetricRationalMatrix([[0] * g.n for _ in range(g.n)])
    while frobenius_distance_squared(
        weighted_laplacian(WeightedSignedGraph(g, tiny)), zero
    ) >= eps * eps:
        tiny = {k: w / 2 for k, w in tiny.items()}

    s = Fraction(1, 2)
    for _ in range(64):
        blended = WeightedSignedGraph(
            g, {k: wg.weights[k] + s * tiny[k] for k in wg.weights}
        )
        if is_simple_spectrum(blended):
            dist = frobenius_distance_squared(
                weighted_laplacian(wg), weighted_laplacian(blended)
            )
            assert dist < eps * eps
            return blended
        s /= 2
    raise CapExceededError(f"no simple spectrum found down to blend factor {s}")
