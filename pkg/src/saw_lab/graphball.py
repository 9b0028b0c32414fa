"""Finite rooted balls of infinite graphs, with completeness tracking.

A ball stores a finite induced piece of an infinite graph together with a
flag per vertex saying whether *all* of that vertex's neighbours are present
in the ball.  Algorithms that walk outward (walk counting, harmonic checks,
injection verification) consult the flag so they never silently read a
truncated neighbourhood.
"""
from __future__ import annotations

import os
from collections import deque

VertexId = int


class GraphError(ValueError):
    """Structural invariant of a ball is violated."""


class FrontierViolation(GraphError):
    """An operation needed the neighbours of an incomplete vertex."""


class ResourceCapError(RuntimeError):
    """A builder or enumerator exceeded its vertex/step budget."""


def max_vertices_cap() -> int:
    # SAW_LAB_MAX_VERTICES caps every builder in the package
    return int(os.environ.get("SAW_LAB_MAX_VERTICES", "5000000"))


class GraphBall:
    """Rooted simple graph with per-vertex completeness flags.

    Vertices are 0..n-1.  `adjacency[v]` is a sorted tuple of neighbours,
    `complete[v]` says the whole neighbourhood of v is in the ball.
    `edge_labels` optionally maps unordered pairs to short strings and
    `vertex_tags` optionally carries builder-specific per-vertex data
    (lattice coordinates, group words, face bookkeeping).  Tags and labels
    are carried along but do not take part in equality or serialization
    invariants beyond the documented text format.
    """

    def __init__(self, adjacency, root, complete, declared_degree=None,
                 edge_labels=None, vertex_tags=None, validate=True):
        self.adjacency = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        self.root = root
        self.complete = tuple(bool(c) for c in complete)
        self.declared_degree = declared_degree
        self.edge_labels = dict(edge_labels) if edge_labels else {}
        self.vertex_tags = list(vertex_tags) if vertex_tags is not None else None
        if validate:
            self.validate()

    @property
    def n(self):
        return len(self.adjacency)

    def neighbors(self, v):
        return self.adjacency[v]

    def is_complete(self, v):
        return self.complete[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def label(self, u, v):
        return self.edge_labels.get((u, v)) or self.edge_labels.get((v, u))

    def validate(self):
        n = self.n
        if len(self.complete) != n:
            raise GraphError("completeness flags do not match vertex count")
        if not (0 <= self.root < n):
            raise GraphError("root out of range")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not (0 <= u < n):
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        if self.declared_degree is not None:
            for v in range(n):
                if self.complete[v] and len(self.adjacency[v]) != self.declared_degree:
                    raise GraphError(
                        f"complete vertex {v} has degree {len(self.adjacency[v])}"
                        f" != declared {self.declared_degree}")
        # connectivity from the root
        if n and len(self.bfs_distances(self.root)) != n:
            raise GraphError("ball is not connected from its root")

    def bfs_distances(self, source):
        dist = {source: 0}
        dq = deque([source])
        while dq:
            v = dq.popleft()
            for u in self.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    dq.append(u)
        return dist

    def distance(self, u, v):
        if u == v:
            return 0
        dist = {u: 0}
        dq = deque([u])
        while dq:
            x = dq.popleft()
            for y in self.adjacency[x]:
                if y == v:
                    return dist[x] + 1
                if y not in dist:
                    dist[y] = dist[x] + 1
                    dq.append(y)
        raise GraphError(f"{u} and {v} are not connected")

    # -- text serialization -------------------------------------------------

    def to_text(self):
        deg = self.declared_degree if self.declared_degree is not None else -1
        lines = [f"ball {self.n} {self.root} {deg}"]
        for v in range(self.n):
            flag = 1 if self.complete[v] else 0
            nbrs = " ".join(str(u) for u in self.adjacency[v])
            lines.append(f"{v} {flag} {nbrs}".rstrip())
        for (u, v), sym in sorted(self.edge_labels.items()):
            lines.append(f"label {u} {v} {sym}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "ball":
            raise GraphError("missing ball header")
        n, root, deg = int(head[1]), int(head[2]), int(head[3])
        adjacency = [()] * n
        complete = [False] * n
        labels = {}
        for ln in lines[1:]:
            parts = ln.split()
            if parts[0] == "label":
                labels[(int(parts[1]), int(parts[2]))] = parts[3]
                continue
            v = int(parts[0])
            complete[v] = parts[1] == "1"
            adjacency[v] = tuple(int(x) for x in parts[2:])
        return cls(adjacency, root, complete,
                   declared_degree=None if deg < 0 else deg,
                   edge_labels=labels)


def induced_ball(ball, radius):
    """Sub-ball of all vertices within `radius` of the root.

    Kept vertices are renumbered by (distance, old id).  A vertex stays
    complete only if it was complete before and sits strictly inside, so the
    flag remains truthful in the smaller ball.
    """
    dist = ball.bfs_distances(ball.root)
    keep = sorted((d, v) for v, d in dist.items() if d <= radius)
    remap = {v: i for i, (_, v) in enumerate(keep)}
    adjacency = []
    complete = []
    tags = [] if ball.vertex_tags is not None else None
    for _, v in keep:
        adjacency.append(tuple(remap[u] for u in ball.adjacency[v] if u in remap))
        complete.append(ball.complete[v] and dist[v] < radius)
        if tags is not None:
            tags.append(ball.vertex_tags[v])
    labels = {(remap[u], remap[v]): s for (u, v), s in ball.edge_labels.items()
              if u in remap and v in remap}
    return GraphBall(adjacency, remap[ball.root], complete,
                     declared_degree=None, edge_labels=labels, vertex_tags=tags)


def girth_within(ball, max_len=None):
    """Length of the shortest cycle in the ball, or None if acyclic.

    Standard BFS sweep: for every start vertex run a BFS and evaluate each
    non-tree edge; the minimum over all sweeps is exact.
    """
    best = None
    n = ball.n
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            v = dq.popleft()
            if best is not None and dist[v] * 2 >= best:
                continue
            for u in ball.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    dq.append(u)
                elif parent[v] != u and parent[u] != v:
                    cand = dist[u] + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
    if best is not None and max_len is not None and best > max_len:
        return None
    return best


def canonical_cycle(cycle):
    """Canonical representative of a cycle given as a vertex tuple.

    Minimum over all rotations of both traversal directions, so any
    re-canonicalization is a fixed point.
    """
    seq = tuple(cycle)
    k = len(seq)
    best = None
    for cand in (seq, tuple(reversed(seq))):
        for r in range(k):
            rot = cand[r:] + cand[:r]
            if best is None or rot < best:
                best = rot
    return best


def enumerate_cycles_up_to(ball, max_len, cap=2_000_000):
    """All simple cycles of length <= max_len, one canonical copy each.

    For every vertex v we search paths whose intermediate vertices all
    exceed v and that return to v, pruning with exact distances back to v.
    `cap` bounds the number of DFS extensions.
    """
    cycles = []
    steps = 0
    for v in range(ball.n):
        dist = ball.bfs_distances(v)
        path = [v]
        on_path = {v}

        def extend(current):
            nonlocal steps
            for u in ball.adjacency[current]:
                steps += 1
                if steps > cap:
                    raise ResourceCapError("cycle enumeration budget exceeded")
                if u == v and len(path) >= 3:
                    # emit each cycle once: fix the traversal direction
                    if path[1] < path[-1]:
                        cycles.append(canonical_cycle(path))
                    continue
                if u <= v or u in on_path:
                    continue
                if len(path) + dist.get(u, max_len + 1) > max_len:
                    continue
                path.append(u)
                on_path.add(u)
                extend(u)
                on_path.remove(u)
                path.pop()

        extend(v)
    return sorted(cycles)


class CycleWalk:
    """A closed walk given by its vertex sequence (orientation significant)."""

    def __init__(self, ball, vertices):
        self.ball = ball
        self.vertices = tuple(vertices)
        if len(self.vertices) < 3:
            raise GraphError("cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("cycle revisits a vertex")
        k = len(self.vertices)
        for i in range(k):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            if b not in ball.adjacency[a]:
                raise GraphError(f"cycle uses missing edge {a}-{b}")

    def __len__(self):
        return len(self.vertices)

    def canonical(self):
        return canonical_cycle(self.vertices)
