"""Builders for the cubic graphs the package studies.

Ladders, trees, free products of cyclic groups, and three vertex-transitive
periodic plane lattices (hexagonal, the square/octagon tiling and the
square/hexagon/dodecagon tiling).  Periodic lattices are described by a
finite fundamental domain plus integer translation offsets and can be
unrolled into rooted balls of any radius.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graphball import GraphBall, GraphError, ResourceCapError, max_vertices_cap


def build_ladder(length, doubly_infinite=False):
    """Ball of the half- or doubly-infinite ladder with `length` rungs.

    Vertex (i, j) for column i and side j in {0, 1} is numbered 2*i + j.
    For the half-infinite flavour the root is the degree-2 corner (0, 0),
    which is a genuine vertex of the infinite graph and therefore complete.
    """
    if length < 2:
        raise GraphError("ladder needs at least 2 columns")
    n = 2 * length
    adj = [[] for _ in range(n)]

    def add(a, b):
        adj[a].append(b)
        adj[b].append(a)

    for i in range(length):
        add(2 * i, 2 * i + 1)
        if i + 1 < length:
            add(2 * i, 2 * (i + 1))
            add(2 * i + 1, 2 * (i + 1) + 1)
    complete = []
    for i in range(length):
        ok = i < length - 1 if not doubly_infinite else 0 < i < length - 1
        complete += [ok, ok]
    root = 0 if not doubly_infinite else 2 * (length // 2)
    return GraphBall(adj, root, complete)


def build_twisted_ladder(length):
    """Window of the quadrilateral chain whose growth rate is sqrt(1+sqrt 3).

    The doubly-infinite graph is a chain of 4-cycles in which consecutive
    cycles are joined by two parallel edges attached at diagonally opposite
    corners: entering a quadrilateral at a corner leaves two crossings of
    length 2 and two of length 4, so rightward walks have per-block weight
    2 z^2 + 2 z^4.  `length` counts quadrilaterals (>= 3); the root sits on
    the middle one.
    """
    if length < 3:
        raise GraphError("twisted ladder needs at least 3 quadrilaterals")
    n = 4 * length
    adj = [[] for _ in range(n)]

    def add(a, b):
        adj[a].append(b)
        adj[b].append(a)

    for k in range(length):
        base = 4 * k
        for j in range(4):
            add(base + j, base + (j + 1) % 4)
        if k + 1 < length:
            add(base + 1, base + 4)       # to corner 0 of the next cycle
            add(base + 3, base + 6)       # to corner 2 of the next cycle
    complete = [0 < v // 4 < length - 1 for v in range(n)]
    root = 4 * (length // 2)
    return GraphBall(adj, root, complete)


def build_tree(degree, depth):
    """Ball of radius `depth` in the infinite `degree`-regular tree."""
    if degree < 2 or depth < 1:
        raise GraphError("need degree >= 2 and depth >= 1")
    adj = [[]]
    dist = [0]
    frontier = [0]
    cap = max_vertices_cap()
    for level in range(1, depth + 1):
        nxt = []
        for v in frontier:
            want = degree - len(adj[v])
            for _ in range(want):
                u = len(adj)
                if u >= cap:
                    raise ResourceCapError("tree ball exceeds vertex cap")
                adj.append([v])
                adj[v].append(u)
                dist.append(level)
                nxt.append(u)
        frontier = nxt
    complete = [d < depth for d in dist]
    return GraphBall(adj, 0, complete)


# -- free products ----------------------------------------------------------

_INV_LETTERS = "xyzuvw"


def free_product_generators(d, g):
    """Generator alphabet for Z2 * ... * Z2 * Zg with d-2 involutions.

    Returns pairs (kind, payload): ('inv', i) for the i-th involution and
    ('rot', +1) / ('rot', -1) for the order-g generator and its inverse.
    """
    if d < 3 or g < 3:
        raise GraphError("need degree >= 3 and cycle length >= 3")
    gens = [("inv", i) for i in range(d - 2)]
    gens += [("rot", 1), ("rot", -1)]
    return gens


def free_product_step(word, gen, g):
    """Right-multiply a normal-form word by a generator.

    Words are tuples of syllables ('inv', i) or ('rot', k) with 1<=k<g and
    no two consecutive syllables of the same kind/index.
    """
    kind, payload = gen
    if kind == "inv":
        if word and word[-1] == ("inv", payload):
            return word[:-1]
        return word + (("inv", payload),)
    k = payload % g
    if word and word[-1][0] == "rot":
        k = (word[-1][1] + payload) % g
        if k == 0:
            return word[:-1]
        return word[:-1] + (("rot", k),)
    return word + (("rot", k),)


def free_product_neighbors(d, g):
    """Neighbour callable on normal-form words, for lazy walk counting."""
    gens = free_product_generators(d, g)

    def nbrs(word):
        out = []
        for gen in gens:
            w = free_product_step(word, gen, g)
            if w not in out:
                out.append(w)
        return out

    return nbrs


def build_free_product(d, g, radius):
    """Ball of the Cayley graph of Z2 * ... * Z2 * Zg (degree d, girth g)."""
    nbrs = free_product_neighbors(d, g)
    cap = max_vertices_cap()
    index = {(): 0}
    words = [()]
    dist = [0]
    adj = [[]]
    labels = {}
    dq = deque([0])
    while dq:
        v = dq.popleft()
        for w in nbrs(words[v]):
            u = index.get(w)
            if u is None:
                if dist[v] >= radius:
                    continue  # frontier: keep edges among present vertices only
                u = len(words)
                if u >= cap:
                    raise ResourceCapError("free product ball exceeds vertex cap")
                index[w] = u
                words.append(w)
                dist.append(dist[v] + 1)
                adj.append([])
                dq.append(u)
            if u not in adj[v]:
                adj[v].append(u)
                adj[u].append(v)
                syl = w[-1] if len(w) > len(words[v]) else words[v][-1]
                sym = _INV_LETTERS[syl[1]] if syl[0] == "inv" else "b"
                labels[(min(u, v), max(u, v))] = sym
    complete = [dd < radius for dd in dist]
    return GraphBall(adj, 0, complete, edge_labels=labels, vertex_tags=words)


# -- periodic plane lattices ------------------------------------------------

@dataclass
class PeriodicGraph:
    """Finite domain + translation data describing a periodic graph.

    `edges` holds triples (i, j, offset): domain vertex i in cell c is
    joined to domain vertex j in cell c+offset.  `coords` and `basis` give
    float plane positions used only for drawing-order decisions (heights
    are always solved, never read off coordinates).
    """
    name: str
    domain_size: int
    dim: int
    edges: list
    coords: list
    basis: list

    def vertex_coords(self, dv, cell):
        x, y = self.coords[dv]
        for k, c in enumerate(cell):
            x += c * self.basis[k][0]
            y += c * self.basis[k][1]
        return (x, y)

    def neighbors(self, dv, cell):
        out = []
        for i, j, off in self.edges:
            if i == dv:
                out.append((j, tuple(c + o for c, o in zip(cell, off))))
            if j == dv:
                out.append((i, tuple(c - o for c, o in zip(cell, off))))
        return out


_SQ3 = math.sqrt(3.0)
_R12 = 1.0 / (2.0 * math.sin(math.pi / 12.0))
_D12 = 2.0 * _R12 * math.cos(math.pi / 12.0) + 1.0


def _hexagonal():
    # brick-wall form: square grid (x, y) keeping the vertical edge above
    # (x, y) exactly when x + y is even.  Combinatorially the hexagonal
    # lattice, and the x coordinate is harmonic with increments {+1,-1,0}.
    return PeriodicGraph(
        name="hexagonal", domain_size=4, dim=2,
        edges=[(0, 1, (0, 0)), (1, 0, (1, 0)),
               (2, 3, (0, 0)), (3, 2, (1, 0)),
               (0, 2, (0, 0)), (3, 1, (0, 1))],
        coords=[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)],
        basis=[(2.0, 0.0), (0.0, 2.0)])


def _arch_4_8_8():
    # one square per cell; vertices N,E,S,W around the square centre
    return PeriodicGraph(
        name="arch_4_8_8", domain_size=4, dim=2,
        edges=[(0, 1, (0, 0)), (1, 2, (0, 0)), (2, 3, (0, 0)), (3, 0, (0, 0)),
               (0, 2, (0, 1)), (1, 3, (1, 0))],
        coords=[(0.5, 0.75), (0.75, 0.5), (0.5, 0.25), (0.25, 0.5)],
        basis=[(1.0, 0.0), (0.0, 1.0)])


def _arch_4_6_12():
    # one dodecagon per cell, vertices at angles 15 + 30k degrees
    coords = []
    for k in range(12):
        ang = math.radians(15.0 + 30.0 * k)
        coords.append((_R12 * math.cos(ang), _R12 * math.sin(ang)))
    edges = [(k, (k + 1) % 12, (0, 0)) for k in range(12)]
    edges += [(0, 5, (1, 0)), (11, 6, (1, 0)),
              (1, 8, (0, 1)), (2, 7, (0, 1)),
              (3, 10, (-1, 1)), (4, 9, (-1, 1))]
    return PeriodicGraph(
        name="arch_4_6_12", domain_size=12, dim=2,
        edges=edges, coords=coords,
        basis=[(_D12, 0.0), (_D12 / 2, _D12 * _SQ3 / 2)])


_PERIODIC = {
    "hexagonal": _hexagonal,
    "arch_4_8_8": _arch_4_8_8,
    "arch_4_6_12": _arch_4_6_12,
}


def periodic_graph(name):
    try:
        return _PERIODIC[name]()
    except KeyError:
        raise GraphError(f"unknown periodic lattice {name!r}") from None


def build_periodic(name, radius):
    """Unroll a periodic lattice to the rooted ball of the given radius.

    Returns (ball, description).  Vertex tags carry (domain_index, cell) so
    periodic data (harmonic heights, translations) can be instantiated on
    the ball afterwards.
    """
    pg = periodic_graph(name)
    cap = max_vertices_cap()
    root_key = (0, (0,) * pg.dim)
    index = {root_key: 0}
    tags = [root_key]
    dist = [0]
    adj = [[]]
    dq = deque([0])
    while dq:
        v = dq.popleft()
        dv, cell = tags[v]
        for key in pg.neighbors(dv, cell):
            u = index.get(key)
            if u is None:
                if dist[v] >= radius:
                    continue  # frontier: keep edges among present vertices only
                u = len(tags)
                if u >= cap:
                    raise ResourceCapError("periodic ball exceeds vertex cap")
                index[key] = u
                tags.append(key)
                dist.append(dist[v] + 1)
                adj.append([])
                dq.append(u)
            if u not in adj[v]:
                adj[v].append(u)
                adj[u].append(v)
    complete = [dd < radius for dd in dist]
    ball = GraphBall(adj, 0, complete, declared_degree=3, vertex_tags=tags)
    return ball, pg


def planar_cyclic_orders(ball, pg):
    """Counterclockwise neighbour order at each vertex of a periodic ball."""
    pos = [pg.vertex_coords(dv, cell) for dv, cell in ball.vertex_tags]
    orders = []
    for v in range(ball.n):
        x0, y0 = pos[v]

        def ang(u):
            x1, y1 = pos[u]
            return math.atan2(y1 - y0, x1 - x0)

        orders.append(tuple(sorted(ball.adjacency[v], key=ang)))
    return orders
