"""Harmonic height functions and the word-to-walk injection they drive.

Heights are exact rationals.  From a height h on a ball we derive the step
maps: m(u) is the neighbour of largest height increase (ties broken by
smallest vertex id), M_u that increase, and q(v | u) the third neighbour of
v = m(u) besides u and m(v).  Words over {H, V} starting with H and with no
VV then map to walks by H -> m-step, V -> q-step; the various strict
inequalities checked here are exactly what make that map injective into
self-avoiding walks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphball import FrontierViolation, GraphBall, GraphError, girth_within
from .sawengine import eastward_words


class SolveError(ValueError):
    """Linear system is inconsistent or underdetermined."""


def solve_rational_linear(rows, rhs):
    """Exact Gaussian elimination over the rationals.

    `rows` is a list of coefficient lists; redundant consistent rows are
    fine, missing rank or contradictions raise SolveError.
    """
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    if not m:
        raise SolveError("empty system")
    ncols = len(m[0]) - 1
    row = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    for r in range(row, len(m)):
        if m[r][-1] != 0:
            raise SolveError("inconsistent system")
    if len(pivots) < ncols:
        raise SolveError("underdetermined system")
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = m[r][-1]
    return sol


class HeightFunction:
    """Rational vertex heights on a ball, normalized to 0 at the root."""

    def __init__(self, ball, values, normalize=True):
        if len(values) != ball.n:
            raise GraphError("height values do not match vertex count")
        vals = [Fraction(v) for v in values]
        if normalize:
            base = vals[ball.root]
            vals = [v - base for v in vals]
        self.ball = ball
        self.values = vals

    def __call__(self, v):
        return self.values[v]

    def increments(self, v):
        return [self.values[u] - self.values[v] for u in self.ball.adjacency[v]]


def is_harmonic(ball, h):
    """Exact harmonicity at every complete vertex: neighbour increments sum to 0."""
    for v in range(ball.n):
        if not ball.complete[v]:
            continue
        if sum(h(u) for u in ball.adjacency[v]) != len(ball.adjacency[v]) * h(v):
            return False
    return True


def coset_sum_height(h, autos):
    """Sum of h over finitely many ball automorphisms, renormalized at root.

    `autos` are vertex permutations of the same ball; averaging heights over
    a symmetry coset is how flat (constant-M) heights are produced from
    lopsided ones.
    """
    ball = h.ball
    vals = []
    for v in range(ball.n):
        vals.append(sum(h(kappa[v]) for kappa in autos))
    return HeightFunction(ball, vals)


class StepFunctions:
    """The maps m, M and q induced by a height on a ball.

    Everything is lazy and raises FrontierViolation when it would need the
    neighbourhood of an incomplete vertex.
    """

    def __init__(self, ball, h):
        self.ball = ball
        self.h = h
        self._m = {}

    def m(self, u):
        got = self._m.get(u)
        if got is not None:
            return got
        if not self.ball.complete[u]:
            raise FrontierViolation(f"m({u}) needs a complete vertex")
        best = None
        for x in self.ball.adjacency[u]:
            inc = self.h(x) - self.h(u)
            if best is None or inc > best[0]:
                best = (inc, x)
        self._m[u] = best[1]
        return best[1]

    def M(self, u):
        return self.h(self.m(u)) - self.h(u)

    def q(self, v, pred):
        """Third neighbour of v = m(pred), besides pred and m(v)."""
        mv = self.m(v)
        if mv == pred:
            raise GraphError(f"degenerate step at {v}: m({v}) is the predecessor")
        rest = [x for x in self.ball.adjacency[v] if x != pred and x != mv]
        if len(rest) != 1:
            raise GraphError(f"q undefined at {v}: expected one remaining neighbour")
        return rest[0]

    def qm(self, u):
        return self.q(self.m(u), u)

    def mqm(self, u):
        return self.m(self.qm(u))


def step_functions(ball, h):
    return StepFunctions(ball, h)


@dataclass
class ConditionCheck:
    holds: bool
    checked: int
    skipped: int
    witness: int | None = None


@dataclass
class ConditionReport:
    eq1: ConditionCheck
    eq2: ConditionCheck
    qm: ConditionCheck
    ag: ConditionCheck
    band: tuple | None   # (min M, max M) over checked vertices
    band_ok: bool        # max M <= 2 min M with min M > 0
    gamma: int | None


def check_conditions(ball, h, gamma=None):
    """Evaluate the strict step inequalities everywhere they are decidable.

    Four families are checked per vertex (or per directed m-edge):
      eq1:  M_{m(u)} - M_u < min(M_u, M_{qm(u)})
      eq2:  2 M_{qm(u)} > M_{m(u)} - M_u + M_{mqm(u)}
      qm :  h(qm(u)) > h(u)  and  h(mqm(u)) > h(m(u))
      ag :  h((qm)^gamma q (u)) > h(u), chain started from each m-edge
    Vertices whose iterates leave the complete region are skipped, not
    failed; each family reports how many sites it actually decided.
    """
    sf = StepFunctions(ball, h)
    if gamma is None:
        g = girth_within(ball)
        gamma = (g - 1 + 1) // 2 if g else 1  # ceil((g-1)/2)

    def sweep(fn, sites):
        holds, checked, skipped, witness = True, 0, 0, None
        for site in sites:
            try:
                ok = fn(site)
            except (FrontierViolation, GraphError):
                skipped += 1
                continue
            checked += 1
            if not ok and holds:
                holds = False
                witness = site
        return ConditionCheck(holds and checked > 0, checked, skipped, witness)

    vertices = [u for u in range(ball.n) if ball.complete[u]]

    def eq1(u):
        d = sf.M(sf.m(u)) - sf.M(u)
        return d < min(sf.M(u), sf.M(sf.qm(u)))

    def eq2(u):
        return 2 * sf.M(sf.qm(u)) > sf.M(sf.m(u)) - sf.M(u) + sf.M(sf.mqm(u))

    def qm_cond(u):
        return h(sf.qm(u)) > h(u) and h(sf.mqm(u)) > h(sf.m(u))

    def ag(edge):
        p, u = edge
        x_prev, x = u, sf.q(u, p)
        for _ in range(gamma):
            y = sf.m(x)
            x_prev, x = y, sf.q(y, x)
        return h(x) > h(u)

    edges = []
    for p in vertices:
        try:
            edges.append((p, sf.m(p)))
        except FrontierViolation:
            pass

    band = None
    for u in vertices:
        try:
            mu = sf.M(u)
        except FrontierViolation:
            continue
        if band is None:
            band = (mu, mu)
        else:
            band = (min(band[0], mu), max(band[1], mu))
    band_ok = band is not None and band[0] > 0 and band[1] <= 2 * band[0]

    return ConditionReport(
        eq1=sweep(eq1, vertices),
        eq2=sweep(eq2, vertices),
        qm=sweep(qm_cond, vertices),
        ag=sweep(ag, edges),
        band=band, band_ok=band_ok, gamma=gamma)


def build_injection(ball, h, n):
    """Map every admissible word of length n to a walk from the root.

    Letter k acts on the walk end f_{k-1}: H appends m(f_{k-1}), V appends
    q(f_{k-1} | f_{k-2}).  Words start with H and avoid VV, so a V step
    always has the predecessor it needs.  Raises FrontierViolation when the
    ball is too small to resolve a step.
    """
    sf = StepFunctions(ball, h)
    walks = []
    for word in eastward_words(n):
        f = [ball.root]
        for k, letter in enumerate(word):
            if letter == "H":
                f.append(sf.m(f[-1]))
            else:
                f.append(sf.q(f[-1], f[-2]))
        walks.append(tuple(f))
    return walks


@dataclass
class InjectionReport:
    n: int
    walks: int
    all_saw: bool
    injective: bool
    bad_walk: tuple | None = None


def verify_injection(walks):
    """Check every walk is self-avoiding and no two walks coincide."""
    all_saw = True
    bad = None
    for w in walks:
        if len(set(w)) != len(w):
            all_saw = False
            bad = w
            break
    injective = len(set(walks)) == len(walks)
    n = len(walks[0]) - 1 if walks else 0
    return InjectionReport(n=n, walks=len(walks), all_saw=all_saw,
                           injective=injective, bad_walk=bad)


@dataclass
class PeriodicHeight:
    """Harmonic height on a periodic lattice: domain values + growth per cell."""
    values: list
    growth: tuple

    def at(self, dv, cell):
        return self.values[dv] + sum(Fraction(g) * c
                                     for g, c in zip(self.growth, cell))

    def on_ball(self, ball):
        if ball.vertex_tags is None:
            raise GraphError("ball carries no periodic tags")
        return HeightFunction(ball, [self.at(dv, cell)
                                     for dv, cell in ball.vertex_tags])


def solve_periodic_harmonic(pg, growth):
    """Unique harmonic height with the given growth per translation vector.

    Sets the height of domain vertex 0 (cell 0) to zero and solves the
    exact linear system expressing harmonicity at every domain vertex.
    """
    growth = tuple(Fraction(g) for g in growth)
    if len(growth) != pg.dim:
        raise GraphError("growth vector does not match lattice dimension")
    D = pg.domain_size
    rows, rhs = [], []
    for dv in range(D):
        coeff = [Fraction(0)] * D
        shift = Fraction(0)
        deg = 0
        for j, cell in pg.neighbors(dv, (0,) * pg.dim):
            coeff[j] += 1
            shift += sum(g * c for g, c in zip(growth, cell))
            deg += 1
        coeff[dv] -= deg
        rows.append(coeff)
        rhs.append(-shift)
    pin = [Fraction(0)] * D
    pin[0] = Fraction(1)
    rows.append(pin)
    rhs.append(Fraction(0))
    vals = solve_rational_linear(rows, rhs)
    return PeriodicHeight(values=vals, growth=growth)
