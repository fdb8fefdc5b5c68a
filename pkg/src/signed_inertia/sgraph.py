"""Signed graphs, consistent weightings, and the graph constructions.

Vertices are labelled 1..n.  Edges carry a sign (+1 or -1); a weighting is
consistent when every edge weight is a nonzero rational of the same sign as
its edge.  All types are immutable by convention and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .ratpoly import Inertia, _to_fraction

Edge = tuple[int, int, int]  # (u, v, sign) with u < v


class ComponentProfile(NamedTuple):
    c: int
    c_plus: int
    c_minus: int
    tau: int


class Block(NamedTuple):
    """A maximal 2-connected piece (bridges show up as 2-vertex blocks)."""

    vertices: frozenset
    edges: tuple


class CliqueJoin(NamedTuple):
    p: int
    q: int
    orientation: str  # "as-is" | "negated"


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph on vertices 1..n with a sign on every edge."""

    n: int
    edges: tuple

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int, int]]) -> "SignedGraph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        normalized = []
        for u, v, s in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{n}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], s))
        normalized.sort()
        return cls(n, tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def m_plus(self) -> int:
        return sum(1 for _, _, s in self.edges if s > 0)

    @property
    def m_minus(self) -> int:
        return sum(1 for _, _, s in self.edges if s < 0)

    def positive_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[2] > 0]

    def negative_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[2] < 0]

    def sign_of(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for a, b, s in self.edges:
            if (a, b) == key:
                return s
        raise KeyError(f"no edge {key}")

    def adjacency(self) -> dict:
        adj = {v: [] for v in range(1, self.n + 1)}
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return adj


def _component_count(n: int, pairs) -> int:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def component_profile(g: SignedGraph) -> ComponentProfile:
    """Component counts of the graph and of its positive/negative subgraphs.

    Isolated vertices count as components.  The flexibility
    ``tau = n + c - c_plus - c_minus`` is always nonnegative.
    """
    c = _component_count(g.n, ((u, v) for u, v, _ in g.edges))
    c_plus = _component_count(g.n, ((u, v) for u, v, s in g.edges if s > 0))
    c_minus = _component_count(g.n, ((u, v) for u, v, s in g.edges if s < 0))
    return ComponentProfile(c, c_plus, c_minus, g.n + c - c_plus - c_minus)


def blocks(g: SignedGraph) -> list[Block]:
    """Biconnected components; every edge lands in exactly one block."""
    adj: dict = {v: [] for v in range(1, g.n + 1)}
    for idx, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    disc: dict = {}
    low: dict = {}
    edge_stack: list[int] = []
    out: list[list[int]] = []
    timer = 0

    def dfs(root: int) -> None:
        nonlocal timer
        # iterative DFS so deep graphs cannot overflow the stack
        work = [(root, None, iter(adj[root]))]
        timer += 1
        disc[root] = low[root] = timer
        while work:
            u, parent_edge, it = work[-1]
            advanced = False
            for w, eidx in it:
                if eidx == parent_edge:
                    continue
                if w not in disc:
                    timer += 1
                    disc[w] = low[w] = timer
                    edge_stack.append(eidx)
                    work.append((w, eidx, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append(eidx)
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if advanced:
                continue
            work.pop()
            if work:
                pu = work[-1][0]
                if low[u] < low[pu]:
                    low[pu] = low[u]
                if low[u] >= disc[pu]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == parent_edge:
                            break
                    out.append(comp)

    for v in range(1, g.n + 1):
        if v not in disc and adj[v]:
            dfs(v)

    result = []
    for comp in out:
        edges = tuple(sorted(g.edges[i] for i in comp))
        verts = frozenset(x for u, v, _ in edges for x in (u, v))
        result.append(Block(verts, edges))
    result.sort(key=lambda b: sorted(b.vertices))
    return result


def has_mixed_block(g: SignedGraph) -> bool:
    for b in blocks(g):
        signs = {s for _, _, s in b.edges}
        if len(signs) > 1:
            return True
    return False


def unique_inertia(g: SignedGraph) -> Optional[Inertia]:
    """The one inertia every consistent weighting realizes, if it exists.

    A signed graph is inertia-rigid exactly when no block mixes edge signs;
    the value is then ``(c_plus - c, c_minus - c, c)``.
    """
    if has_mixed_block(g):
        return None
    prof = component_profile(g)
    return Inertia(prof.c_plus - prof.c, prof.c_minus - prof.c, prof.c)


def classify_clique_join(g: SignedGraph) -> Optional[CliqueJoin]:
    """Recognize complete graphs split into two like-signed cliques.

    Returns ``(p, q, orientation)`` when the graph is two cliques of size p
    and q whose internal edges all carry one sign and whose crossing edges
    all carry the other; orientation "as-is" means internal edges positive.
    Completeness plus the two-clique sign partition is checked directly, so
    no general isomorphism search is needed.
    """
    n = g.n
    if n < 2 or g.m != n * (n - 1) // 2:
        return None
    sign = {(u, v): s for u, v, s in g.edges}

    def attempt(intra: int) -> Optional[tuple[int, int]]:
        part1 = {1} | {v for v in range(2, n + 1) if sign[(1, v)] == intra}
        if len(part1) == n:
            return None
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                same_side = (u in part1) == (v in part1)
                if sign[(u, v)] != (intra if same_side else -intra):
                    return None
        return len(part1), n - len(part1)

    for intra, orientation in ((1, "as-is"), (-1, "negated")):
        sizes = attempt(intra)
        if sizes is not None:
            p, q = sorted(sizes)
            return CliqueJoin(p, q, orientation)
    return None


def negative_join(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Disjoint union plus all cross edges, every cross edge negative."""
    shift = g1.n
    edges = list(g1.edges)
    edges.extend((u + shift, v + shift, s) for u, v, s in g2.edges)
    for u in range(1, g1.n + 1):
        for v in range(1, g2.n + 1):
            edges.append((u, v + shift, -1))
    return SignedGraph.from_edges(g1.n + g2.n, edges)


# -- weighted graphs ----------------------------------------------------------


@dataclass(frozen=True)
class WeightedSignedGraph:
    """A signed graph with a consistent rational weighting."""

    graph: SignedGraph
    weights: dict = field(compare=False)

    def __post_init__(self):
        w = {}
        for u, v, s in self.graph.edges:
            key = (u, v)
            if key not in self.weights:
                raise ValueError(f"edge {key} has no weight")
            val = _to_fraction(self.weights[key])
            if val == 0:
                raise ValueError(f"edge {key} has zero weight")
            if (val > 0) != (s > 0):
                raise ValueError(
                    f"weight {val} of edge {key} contradicts its sign"
                )
            w[key] = val
        if len(self.weights) != len(w):
            raise ValueError("weights given for non-edges")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_weighted_edges(
        cls, n: int, weighted_edges: Sequence[tuple[int, int, object]]
    ) -> "WeightedSignedGraph":
        """Build graph and weighting together; signs inferred from weights."""
        edges = []
        weights = {}
        for u, v, w in weighted_edges:
            w = _to_fraction(w)
            key = (min(u, v), max(u, v))
            edges.append((key[0], key[1], 1 if w > 0 else -1))
            weights[key] = w
        return cls(SignedGraph.from_edges(n, edges), weights)

    @property
    def n(self) -> int:
        return self.graph.n

    def weight(self, u: int, v: int) -> Fraction:
        return self.weights[(min(u, v), max(u, v))]

    def weighted_edges(self) -> list[tuple[int, int, Fraction]]:
        return [(u, v, self.weights[(u, v)]) for u, v, _ in self.graph.edges]

    def canonical_key(self) -> tuple:
        return tuple((u, v, self.weights[(u, v)]) for u, v, _ in self.graph.edges)


def unit_weighting(g: SignedGraph) -> WeightedSignedGraph:
    """The all +/-1 consistent weighting."""
    return WeightedSignedGraph(g, {(u, v): Fraction(s) for u, v, s in g.edges})


def reweighted(wg: WeightedSignedGraph, changes: dict) -> WeightedSignedGraph:
    """Copy with some edge weights replaced (signs must stay consistent)."""
    weights = dict(wg.weights)
    for (u, v), val in changes.items():
        weights[(min(u, v), max(u, v))] = _to_fraction(val)
    return WeightedSignedGraph(wg.graph, weights)


def scale(wg: WeightedSignedGraph, r) -> WeightedSignedGraph:
    """Multiply every edge weight by r > 0."""
    r = _to_fraction(r)
    if r <= 0:
        raise ValueError("scale factor must be positive")
    return WeightedSignedGraph(
        wg.graph, {k: v * r for k, v in wg.weights.items()}
    )


def scale_negative(wg: WeightedSignedGraph, r) -> WeightedSignedGraph:
    """Multiply only the negative edge weights by r > 0."""
    r = _to_fraction(r)
    if r <= 0:
        raise ValueError("scale factor must be positive")
    return WeightedSignedGraph(
        wg.graph, {k: (v * r if v < 0 else v) for k, v in wg.weights.items()}
    )


def at_parameter(wg: WeightedSignedGraph, t) -> WeightedSignedGraph:
    """The one-parameter family member: negative weights dialled by t.

    Only t > 0 keeps the weighting consistent.
    """
    t = _to_fraction(t)
    if t <= 0:
        raise ValueError("inconsistent weighting: parameter t must be positive")
    return scale_negative(wg, t)


def dot(
    a: WeightedSignedGraph, va: int, b: WeightedSignedGraph, vb: int
) -> WeightedSignedGraph:
    """Glue two weighted graphs by identifying one vertex of each.

    The left operand keeps its labels; the right operand's remaining
    vertices are appended in ascending order, so the output is reproducible.
    """
    if not 1 <= va <= a.n:
        raise ValueError(f"vertex {va} not in left operand (n={a.n})")
    if not 1 <= vb <= b.n:
        raise ValueError(f"vertex {vb} not in right operand (n={b.n})")
    mapping = {}
    nxt = a.n
    for v in range(1, b.n + 1):
        if v == vb:
            mapping[v] = va
        else:
            nxt += 1
            mapping[v] = nxt
    merged = [(u, v, w) for u, v, w in a.weighted_edges()]
    merged.extend(
        (mapping[u], mapping[v], w) for u, v, w in b.weighted_edges()
    )
    return WeightedSignedGraph.from_weighted_edges(a.n + b.n - 1, merged)


# -- the chained-triangle family ----------------------------------------------


def mixed_triangle(neg_scale=1) -> WeightedSignedGraph:
    """Triangle with one positive edge {1,2} (weight 1) and two negative
    edges meeting at vertex 3 (weight -neg_scale)."""
    r = _to_fraction(neg_scale)
    if r <= 0:
        raise ValueError("negative-edge scale must be positive")
    return WeightedSignedGraph.from_weighted_edges(
        3, [(1, 2, Fraction(1)), (1, 3, -r), (2, 3, -r)]
    )


def triangle_chain(neg_scales: Sequence) -> WeightedSignedGraph:
    """Chain of mixed triangles glued at cut vertices.

    Block j is a mixed triangle whose negative weights are -neg_scales[j];
    each new triangle's positive-end vertex is identified with the previous
    triangle's shared-negative vertex, which is always the current highest
    label, so block j sits on vertices {2j-1, 2j, 2j+1}.
    """
    if not neg_scales:
        raise ValueError("chain needs at least one triangle")
    chain = mixed_triangle(neg_scales[0])
    for r in neg_scales[1:]:
        chain = dot(chain, chain.n, mixed_triangle(r), 1)
    return chain


def build_lattice_witness(k: int, a: int, b: int) -> WeightedSignedGraph:
    """Chained-triangle weighting that pins its crossings on the rationals.

    The chain has k triangles; the negative scalings 2/1, ..., 2/(a+b) give
    simple crossings at t = 1..a+b, and k-a-b triangles scaled by 4/(2a+1)
    stack a crossing of that multiplicity at t = (2a+1)/2.  Requires
    a + b < k.
    """
    if k < 1 or a < 0 or b < 0:
        raise ValueError("need k >= 1 and a, b >= 0")
    if a + b >= k:
        raise ValueError("need a + b < k")
    r_star = Fraction(4, 2 * a + 1)
    scalings = [Fraction(2, i) for i in range(1, a + 1)]
    scalings.extend([r_star] * (k - a - b))
    scalings.extend(Fraction(2, i) for i in range(a + 1, a + b + 1))
    return triangle_chain(scalings)


def triangle_chain_blocks(g: SignedGraph) -> Optional[list[Block]]:
    """Blocks of g in path order when g is a chain of mixed triangles.

    Every block must be a triangle with one positive and two negative
    edges, consecutive blocks must share exactly one cut vertex, and the
    block adjacency must form a single path.  Returns None otherwise.
    """
    bl = blocks(g)
    if not bl:
        return None
    covered = set()
    for b in bl:
        covered |= b.vertices
        if len(b.vertices) != 3 or len(b.edges) != 3:
            return None
        if sum(1 for _, _, s in b.edges if s > 0) != 1:
            return None
    if covered != set(range(1, g.n + 1)):
        return None
    k = len(bl)
    if k == 1:
        return bl
    # adjacency between blocks through shared vertices
    nbrs = {i: set() for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            shared = bl[i].vertices & bl[j].vertices
            if len(shared) > 1:
                return None
            if shared:
                nbrs[i].add(j)
                nbrs[j].add(i)
    ends = [i for i in range(k) if len(nbrs[i]) == 1]
    if len(ends) != 2 or any(len(nbrs[i]) > 2 for i in range(k)):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < k:
        nxt = [j for j in nbrs[order[-1]] if j != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return [bl[i] for i in order]
