"""Exact self-avoiding-walk enumeration on rooted balls.

The hot path is a compiled depth-first counter over a CSR adjacency copy of
the ball; a deliberately naive recursive counter is kept as an independent
cross-check, and a lazy variant counts walks on implicitly defined graphs
(e.g. normal-form words of a free product) without building a ball.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphball import FrontierViolation, GraphBall, GraphError

try:
    import numba
    _HAVE_NUMBA = True
except Exception:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


def eastward_words(n):
    """All words of length n over {H, V} starting with H and without VV.

    Returned in lexicographic order with H < V; there are fib-many of them
    (1, 1, 2, 3, 5, ... for n = 0, 1, 2, ...).
    """
    if n == 0:
        return [""]
    words = []

    def extend(prefix):
        if len(prefix) == n:
            words.append(prefix)
            return
        extend(prefix + "H")
        if prefix[-1] != "V":
            extend(prefix + "V")

    extend("H")
    return words


def eastward_count(n):
    """Number of eastward words of length n, without enumerating them."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


if _HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def _dfs_kernel(indptr, indices, complete, path, plen, n, counts):
        """Count extensions of a fixed self-avoiding prefix.

        counts[k] accumulates walks with k edges for k >= plen.  Returns the
        index of an offending vertex if the walk front ever has to step from
        an incomplete vertex, else -1.
        """
        occ = np.zeros(indptr.shape[0] - 1, dtype=np.uint8)
        for t in range(plen):
            occ[path[t]] = 1
        depth = plen - 1
        stack_v = np.empty(n + 2, dtype=np.int64)
        stack_i = np.empty(n + 2, dtype=np.int64)
        for t in range(plen):
            stack_v[t] = path[t]
        stack_i[depth] = indptr[stack_v[depth]]
        if depth < n and not complete[stack_v[depth]]:
            return stack_v[depth]
        while depth >= plen - 1:
            v = stack_v[depth]
            i = stack_i[depth]
            if i < indptr[v + 1]:
                stack_i[depth] = i + 1
                u = indices[i]
                if occ[u]:
                    continue
                counts[depth + 1] += 1
                if depth + 1 < n:
                    if not complete[u]:
                        return u
                    occ[u] = 1
                    depth += 1
                    stack_v[depth] = u
                    stack_i[depth] = indptr[u]
            else:
                occ[v] = 0
                depth -= 1
        return -1


def _csr(ball):
    indptr = np.zeros(ball.n + 1, dtype=np.int64)
    for v in range(ball.n):
        indptr[v + 1] = indptr[v] + len(ball.adjacency[v])
    indices = np.empty(indptr[-1], dtype=np.int64)
    pos = 0
    for v in range(ball.n):
        for u in ball.adjacency[v]:
            indices[pos] = u
            pos += 1
    comp = np.array(ball.complete, dtype=np.uint8)
    return indptr, indices, comp


def _prefixes(ball, depth, n):
    """All self-avoiding prefixes of the given edge count, plus the short
    walk tallies; frontier violations surface here for the shallow part."""
    counts = [0] * (depth + 1)
    counts[0] = 1
    out = []

    def rec(path, occ):
        k = len(path) - 1
        if k == depth:
            out.append(list(path))
            return
        v = path[-1]
        if k < n and not ball.complete[v]:
            raise FrontierViolation(f"walk front reached incomplete vertex {v}")
        for u in ball.adjacency[v]:
            if u in occ:
                continue
            counts[k + 1] += 1
            path.append(u)
            occ.add(u)
            rec(path, occ)
            occ.discard(u)
            path.pop()

    rec([ball.root], {ball.root})
    return counts, out

def count_saws(ball, n, threads=1):
    """Exact counts of self-avoiding walks from the root, lengths 0..n.

    Raises FrontierViolation if any walk of length < n stands on an
    incomplete vertex (its continuations would be unknowable).  Thread
    parallelism splits the walk tree at a fixed prefix depth; results are
    deterministic either way.
    """
    if n < 0:
        raise GraphError("negative walk length")
    if not _HAVE_NUMBA:  # pragma: no cover
        return naive_count_saws(ball, n)
    # counts stay below 2**63 for any cubic instance with n <= 60
    if n > 60:
        raise GraphError("compiled counter supports n <= 60")
    indptr, indices, comp = _csr(ball)
    depth = 0
    if threads > 1 and n >= 8:
        depth = 4
        while ball.n and len(_prefixes(ball, depth, n)[1]) < 8 * threads and depth < n - 1:
            depth += 1
    depth = min(depth, n)
    shallow, prefixes = _prefixes(ball, depth, n)
    totals = [0] * (n + 1)
    for k in range(min(depth, n) + 1):
        totals[k] = shallow[k]

    def run(prefix):
        counts = np.zeros(n + 1, dtype=np.int64)
        path = np.array(prefix, dtype=np.int64)
        bad = _dfs_kernel(indptr, indices, comp, path, len(path), n, counts)
        return bad, counts

    if depth == n or not prefixes:
        return totals
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, prefixes))
    else:
        results = [run(p) for p in prefixes]
    for bad, counts in results:
        if bad >= 0:
            raise FrontierViolation(f"walk front reached incomplete vertex {bad}")
        for k in range(depth + 1, n + 1):
            totals[k] += int(counts[k])
    return totals


def naive_count_saws(ball, n):
    """Reference counter: direct recursion, arbitrary precision, no tricks."""
    counts = [0] * (n + 1)
    counts[0] = 1

    def rec(v, k, occ):
        if k == n:
            return
        if not ball.complete[v]:
            raise FrontierViolation(f"walk front reached incomplete vertex {v}")
        for u in ball.adjacency[v]:
            if u in occ:
                continue
            counts[k + 1] += 1
            occ.add(u)
            rec(u, k + 1, occ)
            occ.discard(u)

    rec(ball.root, 0, {ball.root})
    return counts


def count_saws_lazy(neighbors_fn, root, n):
    """Walk counts on an implicitly defined graph.

    `neighbors_fn` maps a vertex key to its full neighbour list, so every
    reachable vertex behaves as complete; memory stays proportional to the
    walk length."""
    counts = [0] * (n + 1)
    counts[0] = 1

    def rec(v, k, occ):
        if k == n:
            return
        for u in neighbors_fn(v):
            if u in occ:
                continue
            counts[k + 1] += 1
            occ.add(u)
            rec(u, k + 1, occ)
            occ.discard(u)

    rec(root, 0, {root})
    return counts


@dataclass
class MuEstimate:
    n: int
    ratio: float          # sigma_n / sigma_{n-1}
    root: float           # sigma_n ** (1/n)


def estimate_mu(counts):
    """Consecutive-ratio and n-th-root growth estimates from exact counts."""
    n = len(counts) - 1
    if n < 1 or counts[n - 1] == 0:
        raise GraphError("need at least two positive counts")
    return MuEstimate(n=n,
                      ratio=counts[n] / counts[n - 1],
                      root=math.exp(math.log(counts[n]) / n))


def truncated_generating_function(counts, z):
    """Partial sum  sum_k sigma_k z^k  as an exact rational."""
    z = Fraction(z)
    acc = Fraction(0)
    p = Fraction(1)
    for c in counts:
        acc += c * p
        p *= z
    return acc


def subdivide_edges(ball, times=1):
    """Apply `times` rounds of edge subdivision (each round puts one midpoint
    on every current edge).

    Original vertices keep their ids; midpoints are appended with tags
    ('mid', u, v) naming the endpoints they split in that round.  A midpoint
    always knows both its neighbours, so it is complete by construction.
    """
    out = ball
    for _ in range(times):
        n = out.n
        adj = [[] for _ in range(n)]
        complete = list(out.complete)
        tags = list(out.vertex_tags) if out.vertex_tags is not None else [None] * n
        labels = {}
        for v in range(n):
            for u in out.adjacency[v]:
                if u < v:
                    continue
                m = len(adj)
                adj.append([v, u])
                adj[v].append(m)
                adj[u].append(m)
                complete.append(True)
                tags.append(("mid", v, u))
                sym = out.label(v, u)
                if sym is not None:
                    labels[(v, m)] = sym
                    labels[(m, u)] = sym
        out = GraphBall(adj, out.root, complete, edge_labels=labels,
                       vertex_tags=tags)
    return out
