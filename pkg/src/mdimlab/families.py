"""Named graph families and the covering constructions built on them.

Vertex orders are deterministic: subsets are listed in colexicographic
order, field elements as 0..q-1, and bit-vectors as the integers they
encode.  Families overlap (odd(3) = kneser(5,2) = Petersen); no
deduplication is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadParameters, NotPrime, NotSrgKEquals2c
from .graphs import Graph, bfs_distances, intersection_array


@dataclass(frozen=True)
class LabeledCover:
    """A constructed graph together with a tag for each vertex.

    Tags are a bijection onto the construction's abstract vertex set, e.g.
    "3+" / "3-" for the two copies of vertex 3 in a bipartite double.
    """

    graph: Graph
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.tags) != self.graph.n:
            raise BadParameters("one tag per vertex required")
        if len(set(self.tags)) != self.graph.n:
            raise BadParameters("tags must be distinct")

    def index(self, tag: str) -> int:
        return self.tags.index(tag)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def colex_subsets(m: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of {0..m-1} in colexicographic order."""
    return sorted(combinations(range(m), r), key=lambda s: tuple(reversed(s)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameters("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameters("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(s: int, t: int) -> Graph:
    """s parts of size t; vertices v with v // t as their part."""
    if s < 2 or t < 1:
        raise BadParameters("complete multipartite needs s >= 2 parts of size t >= 1")
    n = s * t
    edges = [(u, w) for u, w in combinations(range(n), 2) if u // t != w // t]
    return Graph.from_edges(n, edges)


def disjoint_cliques(s: int, t: int) -> Graph:
    """s disjoint copies of K_t; vertices v with v // t as their copy."""
    if s < 1 or t < 1:
        raise BadParameters("needs s >= 1 copies of K_t with t >= 1")
    n = s * t
    edges = [(u, w) for u, w in combinations(range(n), 2) if u // t == w // t]
    return Graph.from_edges(n, edges)


def complete_bipartite_minus_matching(v: int) -> Graph:
    """K_{v,v} minus a perfect matching; u on one side pairs with u+v."""
    if v < 2:
        raise BadParameters("needs v >= 2")
    edges = [(u, v + w) for u in range(v) for w in range(v) if u != w]
    return Graph.from_edges(2 * v, edges)


def hypercube(m: int) -> Graph:
    if m < 1:
        raise BadParameters("hypercube needs m >= 1")
    n = 1 << m
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(m) if u < u ^ (1 << b)]
    return Graph.from_edges(n, edges)


def johnson(m: int, r: int) -> Graph:
    if not 1 <= r <= m - 1:
        raise BadParameters("johnson needs 1 <= r <= m-1")
    verts = colex_subsets(m, r)
    edges = [
        (i, j)
        for i, j in combinations(range(len(verts)), 2)
        if len(set(verts[i]) & set(verts[j])) == r - 1
    ]
    return Graph.from_edges(len(verts), edges)


def kneser(m: int, r: int) -> Graph:
    if m < 2 * r + 1:
        raise BadParameters("kneser needs m >= 2r+1 to be connected")
    verts = colex_subsets(m, r)
    edges = [
        (i, j)
        for i, j in combinations(range(len(verts)), 2)
        if not set(verts[i]) & set(verts[j])
    ]
    return Graph.from_edges(len(verts), edges)


def odd_graph(r: int) -> Graph:
    """Disjointness graph on (r-1)-subsets of a (2r-1)-set; odd(3) is Petersen."""
    if r < 2:
        raise BadParameters("odd graph needs r >= 2")
    return kneser(2 * r - 1, r - 1)


def paley(q: int) -> Graph:
    if not is_prime(q):
        raise NotPrime(f"paley needs a prime modulus, got {q}")
    if q % 4 != 1:
        raise BadParameters("paley needs q congruent to 1 mod 4")
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(u, w) for u, w in combinations(range(q), 2) if (w - u) % q in squares]
    return Graph.from_edges(q, edges)


def rook(a: int, b: int) -> Graph:
    """Rook's graph on an a x b board; vertex (i, j) is i*b + j."""
    if a < 2 or b < 2:
        raise BadParameters("rook needs both sides >= 2")
    n = a * b
    edges = []
    for u, w in combinations(range(n), 2):
        if u // b == w // b or u % b == w % b:
            edges.append((u, w))
    return Graph.from_edges(n, edges)


# 16-vertex, valency-6 graph with parameters (16, 6, 2, 2) that is not the
# 4x4 rook's graph.  Shipped as a fixed edge table; vertex (i, j) on the
# 4x4 torus is 4*i + j and u ~ w iff their difference is one of
# (0,1), (0,3), (1,0), (3,0), (1,1), (3,3).
_SHRIKHANDE_EDGES = (
    (0, 1), (0, 3), (0, 4), (0, 5), (0, 12), (0, 15),
    (1, 2), (1, 5), (1, 6), (1, 12), (1, 13),
    (2, 3), (2, 6), (2, 7), (2, 13), (2, 14),
    (3, 4), (3, 7), (3, 14), (3, 15),
    (4, 5), (4, 7), (4, 8), (4, 9),
    (5, 6), (5, 9), (5, 10),
    (6, 7), (6, 10), (6, 11),
    (7, 8), (7, 11),
    (8, 9), (8, 11), (8, 12), (8, 13),
    (9, 10), (9, 13), (9, 14),
    (10, 11), (10, 14), (10, 15),
    (11, 12), (11, 15),
    (12, 13), (12, 15),
    (13, 14),
    (14, 15),
)


def shrikhande() -> Graph:
    return Graph.from_edges(16, _SHRIKHANDE_EDGES)


def gq22_incidence() -> Graph:
    """Point-line incidence graph of the generalized quadrangle of order (2, 2).

    Points are the 15 2-subsets of a 6-set (colex order); lines are the 15
    partitions of the 6-set into three 2-subsets (lex order by sorted parts);
    a point lies on a line iff it is one of its parts.  Points come first.
    """
    points = colex_subsets(6, 2)
    matchings = sorted(
        {
            tuple(sorted((tuple(sorted(p1)), tuple(sorted(p2)), tuple(sorted(p3)))))
            for p1, p2, p3 in _partitions_into_pairs()
        }
    )
    edges = []
    for j, line in enumerate(matchings):
        for part in line:
            edges.append((points.index(part), 15 + j))
    return Graph.from_edges(30, edges)


def _partitions_into_pairs():
    items = list(range(6))

    def rec(rest):
        if not rest:
            yield ()
            return
        first = rest[0]
        for other in rest[1:]:
            pair = (first, other)
            remaining = [x for x in rest if x not in pair]
            for tail in rec(remaining):
                yield (pair,) + tail

    yield from rec(items)


def bipartite_double(g: Graph) -> LabeledCover:
    """Two copies of the vertex set with u+ ~ w- iff u ~ w in g.

    Vertex v of g appears as v (tag "v+") and v + n (tag "v-").
    """
    n = g.n
    edges = [(u, n + w) for u in range(n) for w in g.neighbors(u)]
    graph = Graph.from_edges(2 * n, {(min(u, w), max(u, w)) for u, w in edges})
    tags = tuple(f"{v}+" for v in range(n)) + tuple(f"{v}-" for v in range(n))
    return LabeledCover(graph=graph, tags=tags)


def taylor(delta: Graph) -> LabeledCover:
    """Two-fold antipodal cover of diameter 3 built from a strongly regular
    graph with parameters (n, 2c, a, c).

    Vertices: 0..n-1 are the plus copies, n..2n-1 the minus copies, 2n and
    2n+1 the two poles.  The pole 2n is adjacent to every plus copy; plus
    copies follow delta; a plus copy u is adjacent to the minus copy of w
    iff u != w and u is not adjacent to w in delta.
    """
    dm = bfs_distances(delta)
    ia = intersection_array(delta, dm)
    params = ia.srg_params(delta.n)
    if params is None or params.k != 2 * params.c:
        raise NotSrgKEquals2c(
            "taylor construction needs a strongly regular graph with k = 2c"
        )
    n = delta.n
    edges = []
    for u in range(n):
        edges.append((u, 2 * n))          # pole+ to plus copies
        edges.append((n + u, 2 * n + 1))  # pole- to minus copies
        for w in delta.neighbors(u):
            if u < w:
                edges.append((u, w))
                edges.append((n + u, n + w))
        for w in range(n):
            if w != u and not delta.has_edge(u, w):
                edges.append((u, n + w))
    tags = (
        tuple(f"{v}+" for v in range(n))
        + tuple(f"{v}-" for v in range(n))
        + ("inf+", "inf-")
    )
    return LabeledCover(graph=Graph.from_edges(2 * n + 2, edges), tags=tags)


_FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_multipartite": (complete_multipartite, 2),
    "disjoint_cliques": (disjoint_cliques, 2),
    "complete_bipartite_minus_matching": (complete_bipartite_minus_matching, 1),
    "hypercube": (hypercube, 1),
    "johnson": (johnson, 2),
    "kneser": (kneser, 2),
    "odd": (odd_graph, 1),
    "paley": (paley, 1),
    "rook": (rook, 2),
    "shrikhande": (shrikhande, 0),
    "gq22_incidence": (gq22_incidence, 0),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def family(name: str, *params: int) -> Graph:
    """Construct a named family member; raises BadParameters for unknown names
    or wrong arity."""
    if name not in _FAMILIES:
        raise BadParameters(
            f"unknown family {name!r}; known: {', '.join(family_names())}"
        )
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise BadParameters(f"family {name!r} takes {arity} parameter(s)")
    return fn(*params)
