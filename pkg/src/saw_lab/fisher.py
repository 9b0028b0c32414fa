"""Certified growth-bound equations and the cycle-for-vertex transformation.

Every numeric constant the package reports comes out of `solve`, which
bisects a named one-variable equation to a guaranteed bracket and residual,
never out of a hand-typed decimal.  The structural half of the module
replaces each degree-d vertex by a d-cycle (and inverts that), which is the
graph move behind all the equation shapes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graphball import (GraphBall, GraphError, enumerate_cycles_up_to)

BRACKET_TOL = 1e-13
RESIDUAL_TOL = 1e-12


@dataclass
class GrowthEquation:
    """One-variable equation f(x) = 0 with a sign-changing bracket.

    `bound` turns the root into the growth bound it certifies: 'root' for
    equations solved directly in the growth variable, 'reciprocal' when the
    variable is the weight z = 1/growth.
    """
    name: str
    fn: object
    bracket: tuple
    bound: str = "root"


@dataclass
class RootResult:
    name: str
    root: float
    bound_value: float
    residual: float
    bracket_width: float
    iterations: int


def solve(eq, max_iter=240):
    """Bisection with certified bracket and residual.

    Refuses to answer unless the final bracket is below BRACKET_TOL
    (relative) and the midpoint residual below RESIDUAL_TOL at the scale of
    the function values at the bracket ends.
    """
    a, b = map(float, eq.bracket)
    fa, fb = eq.fn(a), eq.fn(b)
    if fa == 0.0:
        b = a
    elif fb == 0.0:
        a = b
    elif (fa > 0) == (fb > 0):
        raise GraphError(f"{eq.name}: bracket does not change sign")
    it = 0
    while b - a > BRACKET_TOL * max(1.0, abs(b)) and it < max_iter:
        mid = 0.5 * (a + b)
        if mid == a or mid == b:
            break
        fm = eq.fn(mid)
        if fm == 0.0:
            a = b = mid
            break
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
        it += 1
    root = 0.5 * (a + b)
    residual = eq.fn(root)
    scale = max(1.0, abs(eq.fn(eq.bracket[0])), abs(eq.fn(eq.bracket[1])))
    if b - a > BRACKET_TOL * max(1.0, abs(b)) or abs(residual) > RESIDUAL_TOL * scale:
        raise GraphError(f"{eq.name}: could not certify root")
    bound = 1.0 / root if eq.bound == "reciprocal" else root
    return RootResult(name=eq.name, root=root, bound_value=bound,
                      residual=residual, bracket_width=b - a, iterations=it)


# -- equation constructors --------------------------------------------------

def split_vertex_equation(mu_parent, name=None):
    """1/x^2 + 1/x^3 = 1/mu: growth x of the 3-cycle version of a cubic
    graph with growth mu."""
    inv = 1.0 / mu_parent
    return GrowthEquation(
        name=name or f"split3({mu_parent:g})",
        fn=lambda x: 1.0 / x ** 2 + 1.0 / x ** 3 - inv,
        bracket=(1.0001, 4.0))


def weight_poly_equation(coeffs, name):
    """sum_k c_k z^k = 1 for the walk weight z; bound is 1/root."""

    def fn(z):
        return sum(c * z ** k for k, c in enumerate(coeffs)) - 1.0

    return GrowthEquation(name=name, fn=fn, bracket=(1e-9, 1.0 - 1e-9),
                          bound="reciprocal")


def ratio_bound_equation(d, g):
    """The sharp degree/girth bound equation.

    With M1 = z and M2 = 2(z + ... + z^{g-1}), solve
      (d-2) M1/(1+M1) + M2/(1+M2) = 1
    for the smallest positive z; the certified growth bound is 1/z.
    """
    if d < 3 or g < 3:
        raise GraphError("need d >= 3 and g >= 3")

    def fn(z):
        m1 = z
        m2 = 2.0 * sum(z ** i for i in range(1, g))
        return (d - 2) * m1 / (1 + m1) + m2 / (1 + m2) - 1.0

    return GrowthEquation(name=f"ratio({d},{g})", fn=fn,
                          bracket=(1e-9, 1.0 - 1e-9), bound="reciprocal")


def hexagon_lift_equation(mu_parent, name=None):
    """z^3 (1+z)^2 = 1/mu: weight equation for four-way lifts of walks on a
    triangular supergraph with growth mu; bound is 1/root."""
    inv = 1.0 / mu_parent
    return GrowthEquation(
        name=name or f"hexlift({mu_parent:g})",
        fn=lambda z: z ** 3 * (1.0 + z) ** 2 - inv,
        bracket=(1e-9, 1.0 - 1e-9), bound="reciprocal")


def power_equation(power, value, name):
    """x^power = value, solved on (1, value+2)."""
    return GrowthEquation(name=name, fn=lambda x: x ** power - value,
                          bracket=(1.0, float(value) + 2.0))


NAMED = {
    # lower bound for cubic graphs of girth >= 3 (parent growth sqrt 2)
    "x1": lambda: split_vertex_equation(math.sqrt(2.0), name="x1"),
    # lower bound for cubic graphs of girth >= 4 (parent growth 2)
    "x2": lambda: split_vertex_equation(2.0, name="x2"),
    "y1": lambda: power_equation(6, 12.0, name="y1"),
    # largest z in (0,1) with 2z(z + z^2 + z^3) = 1; bound 1/z
    "y2": lambda: weight_poly_equation([0, 0, 2, 2, 2], name="y2"),
    # crossed-quadrilateral ladder: 2z^2 + 2z^4 = 1
    "twisted_ladder": lambda: weight_poly_equation([0, 0, 2, 0, 2],
                                                   name="twisted_ladder"),
    # hexagon-lift bound fed with the square/octagon growth sqrt(2+sqrt 2)
    "hex_lift_sqrt": lambda: hexagon_lift_equation(
        math.sqrt(2.0 + math.sqrt(2.0)), name="hex_lift_sqrt"),
}


def named_equation(name):
    try:
        return NAMED[name]()
    except KeyError:
        raise GraphError(f"unknown equation {name!r}") from None


def fisher_mu_bounds(cycle_len, mu_parent):
    """Growth bound for the graph whose vertices were blown into d-cycles.

    cycle_len 3 gives the exact relation; even 2r gives the lower bound
    (2 mu)^(1/(r+1)); odd 2r+1 solves 1/x^{r+1} + 1/x^{r+2} = 1/mu.
    Returns (value, exact_flag).
    """
    if cycle_len == 3:
        return solve(split_vertex_equation(mu_parent)).root, True
    if cycle_len % 2 == 0:
        r = cycle_len // 2
        return (2.0 * mu_parent) ** (1.0 / (r + 1)), False
    r = cycle_len // 2
    inv = 1.0 / mu_parent

    def fn(x):
        return 1.0 / x ** (r + 1) + 1.0 / x ** (r + 2) - inv

    eq = GrowthEquation(name=f"odd_cycle({cycle_len})", fn=fn, bracket=(1.0001, 4.0))
    return solve(eq).root, False


def recurrence_growth(coeffs):
    """Dominant root of x^k = c_1 x^(k-1) + ... + c_k, certified by bisection."""
    coeffs = list(coeffs)
    if not coeffs or all(c == 0 for c in coeffs):
        raise GraphError("empty recurrence")
    if any(c < 0 for c in coeffs):
        raise GraphError("need nonnegative coefficients")

    def fn(x):
        return 1.0 - sum(c / x ** (i + 1) for i, c in enumerate(coeffs))

    hi = 1.0 + float(sum(coeffs))
    eq = GrowthEquation(name=f"recurrence{tuple(coeffs)}", fn=fn,
                        bracket=(1e-6, hi))
    return solve(eq).root


# -- cycle-for-vertex transformation ---------------------------------------

def fisher_transform(ball, orders=None):
    """Replace every complete vertex by a cycle through its edge ends.

    `orders` optionally fixes the cyclic neighbour order per vertex (use a
    planar order to stay planar); by default the sorted adjacency order is
    used.  Incomplete vertices survive as plain vertices so the boundary
    stays honest.
    """
    if orders is None:
        orders = [ball.adjacency[v] for v in range(ball.n)]
    index = {}
    tags = []

    def vid(key):
        got = index.get(key)
        if got is None:
            got = len(tags)
            index[key] = got
            tags.append(key)
        return got

    adj = []

    def add(a, b):
        while len(adj) <= max(a, b):
            adj.append([])
        if b not in adj[a]:
            adj[a].append(b)
            adj[b].append(a)

    for v in range(ball.n):
        if not ball.complete[v]:
            vid(("orig", v))
            continue
        d = len(orders[v])
        for i in range(d):
            a = vid(("cyc", v, i))
            b = vid(("cyc", v, (i + 1) % d))
            add(a, b)
    for v in range(ball.n):
        for i, u in enumerate(orders[v]):
            if not ball.complete[v] or u < v and ball.complete[u]:
                continue
            a = vid(("cyc", v, i))
            if ball.complete[u]:
                j = list(orders[u]).index(v)
                b = vid(("cyc", u, j))
            else:
                b = vid(("orig", u))
            add(a, b)
    # edges between two incomplete vertices vanish with their endpoints'
    # cycles unbuilt; keep them as plain edges
    for v in range(ball.n):
        if ball.complete[v]:
            continue
        for u in ball.adjacency[v]:
            if u < v and not ball.complete[u]:
                add(vid(("orig", v)), vid(("orig", u)))
    while len(adj) < len(tags):
        adj.append([])
    complete = []
    for key in tags:
        if key[0] == "cyc":
            complete.append(ball.complete[key[1]])
        else:
            complete.append(False)
    if ball.complete[ball.root]:
        root = index[("cyc", ball.root, 0)]
    else:
        root = index[("orig", ball.root)]
    return GraphBall(adj, root, complete, vertex_tags=tags)


def _deep_vertices(ball, margin):
    """Vertices whose whole distance-`margin` neighbourhood is complete, so
    any short cycle through them is fully visible in the ball."""
    deep = []
    for v in range(ball.n):
        dist = {v: 0}
        stack = [v]
        ok = ball.complete[v]
        while stack and ok:
            x = stack.pop()
            if dist[x] >= margin:
                continue
            for u in ball.adjacency[x]:
                if u not in dist:
                    dist[u] = dist[x] + 1
                    if not ball.complete[u] and dist[u] < margin:
                        ok = False
                        break
                    stack.append(u)
        if ok:
            deep.append(v)
    return deep


def unique_small_face_cover(ball, k):
    """Does every sufficiently interior vertex lie on exactly one k-cycle?

    Quantifies over vertices far enough from the boundary that every
    k-cycle through them is certain to be present; returns False when no
    vertex is that deep (nothing was verified)."""
    cycles = [c for c in enumerate_cycles_up_to(ball, k) if len(c) == k]
    hits = [0] * ball.n
    for c in cycles:
        for v in c:
            hits[v] += 1
    deep = _deep_vertices(ball, k // 2)
    return bool(deep) and all(hits[v] == 1 for v in deep)


def contract_small_faces(ball, k):
    """Contract the unique k-cycle through each complete vertex to a point.

    Inverse of `fisher_transform` wherever the cover is unique; raises if an
    interior vertex lies on zero or several k-cycles.  Boundary vertices
    not on any visible k-cycle survive as plain incomplete vertices.
    """
    cycles = [c for c in enumerate_cycles_up_to(ball, k) if len(c) == k]
    owner = {}
    for ci, c in enumerate(cycles):
        for v in c:
            if v in owner:
                raise GraphError(f"vertex {v} lies on two {k}-cycles")
            owner[v] = ci
    for v in _deep_vertices(ball, k // 2):
        if v not in owner:
            raise GraphError(f"interior vertex {v} lies on no {k}-cycle")
    comp = {}
    tags = []
    for v in range(ball.n):
        key = ("face", owner[v]) if v in owner else ("orig", v)
        if key not in comp:
            comp[key] = len(tags)
            tags.append(key)
    adj = [[] for _ in tags]
    complete = [True] * len(tags)
    for key, i in comp.items():
        if key[0] == "orig":
            complete[i] = False
        else:
            complete[i] = all(ball.complete[v] for v in cycles[key[1]])
    for v in range(ball.n):
        a = comp[("face", owner[v])] if v in owner else comp[("orig", v)]
        for u in ball.adjacency[v]:
            b = comp[("face", owner[u])] if u in owner else comp[("orig", u)]
            if a != b and b not in adj[a]:
                adj[a].append(b)
                adj[b].append(a)
    root = comp[("face", owner[ball.root])] if ball.root in owner \
        else comp[("orig", ball.root)]
    return GraphBall(adj, root, complete, vertex_tags=tags)
