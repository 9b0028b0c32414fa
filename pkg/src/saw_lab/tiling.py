"""Cubic plane tilings by vertex type and the walk machinery on them.

A type vector (k1, k2, k3) prescribes the three face sizes meeting at every
vertex.  `generate_tiling` grows a rooted disk of such a tiling face by
face, keeping an explicit rotation system (counterclockwise slot order per
vertex, one face object per corner), so turn directions, face traversals
and enclosed-face sums are available downstream.  On top of that sit the
turn-balance invariant rho and four deterministic word-to-walk maps, one
per family of type vectors.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphball import (GraphBall, GraphError, ResourceCapError,
                        max_vertices_cap)
from .sawengine import eastward_words


def curvature_f(tv):
    """sum(1 - 2/k) over the type vector; 2 is the flat value.

    Infinite faces may be given as math.inf (their term is 1)."""
    total = 0.0
    for k in tv:
        if k == math.inf:
            total += 1.0
        else:
            if k < 3:
                raise GraphError("face sizes must be >= 3")
            total += 1.0 - 2.0 / k
    return total


def classify(tv):
    f = curvature_f(tv)
    if abs(f - 2.0) < 1e-12:
        return "euclidean"
    return "hyperbolic" if f > 2.0 else "spherical"


def admissible_family(tv):
    """Which of the three realizable families a cubic type vector falls in.

    'A': (m, m, m); 'B': (m, 2n, 2n) with m odd; 'C': all even.  Returns
    None for vectors outside the families."""
    a, b, c = sorted(tv)
    if a == b == c:
        return "A"
    if all(k % 2 == 0 for k in (a, b, c)):
        return "C"
    if a % 2 == 1 and b == c and b % 2 == 0:
        return "B"
    if b % 2 == 1 and a == c:  # cannot happen after sorting, kept for clarity
        return "B"
    return None


class _Face:
    __slots__ = ("size", "path", "closed", "rep")

    def __init__(self, size, path):
        self.size = size
        self.path = path
        self.closed = False
        self.rep = self


def _find(f):
    while f.rep is not f:
        f.rep = f.rep.rep
        f = f.rep
    return f


class Tiling:
    """A rooted disk of the tiling with its rotation system.

    `nbr[v]` lists the three neighbours of v in counterclockwise slot order
    (None where the disk was not grown); the face in the corner between
    slots i and i+1 is `corner[v][i]`, so the face to the *left* of the
    dart at slot i is `corner[v][i]` and the one to its right is
    `corner[v][i-1]`.
    """

    def __init__(self, tv, radius):
        tv = tuple(int(k) for k in tv)
        if len(tv) != 3 or any(k < 3 for k in tv):
            raise GraphError("type vector needs three face sizes >= 3")
        if admissible_family(tv) is None:
            raise GraphError(f"type vector {tv} is not realizable")
        self.tv = tv
        self.radius = radius
        self._words = []
        for r in range(3):
            self._words.append(tv[r:] + tv[:r])
        rev = tv[::-1]
        for r in range(3):
            w = rev[r:] + rev[:r]
            if w not in self._words:
                self._words.append(w)
        self.nbr = []
        self.corner = []
        self.csize = []
        self.dist = []
        self._slot = {}
        self._pending = deque()
        self._cap = max_vertices_cap()
        self._new_vertex(tv, 0)
        self._grow()
        self.ball = self._to_ball()

    # -- construction -------------------------------------------------------

    def _new_vertex(self, word, dist):
        v = len(self.nbr)
        if v >= self._cap:
            raise ResourceCapError("tiling disk exceeds vertex cap")
        self.nbr.append([None, None, None])
        self.corner.append([None, None, None])
        self.csize.append(tuple(word))
        self.dist.append(dist)
        return v

    def _ensure_corners(self, v):
        for i in range(3):
            if self.corner[v][i] is None:
                self.corner[v][i] = _Face(self.csize[v][i], [v])

    def _corner_of(self, v, face):
        for i in range(3):
            c = self.corner[v][i]
            if c is not None and _find(c) is face:
                return i
        raise GraphError("face does not touch vertex")

    def _add_edge(self, v, i, u, j):
        if self.nbr[v][i] is not None or self.nbr[u][j] is not None:
            raise GraphError("slot already used")
        if u in self.nbr[v]:
            raise GraphError("duplicate edge")
        self.nbr[v][i] = u
        self.nbr[u][j] = v
        self._slot[(v, u)] = i
        self._slot[(u, v)] = j

    def _extend_path(self, face, v, u):
        if face.closed:
            raise GraphError("extending a closed face")
        if face.path[-1] == v:
            face.path.append(u)
        elif face.path[0] == v:
            face.path.insert(0, u)
        else:
            raise GraphError("extending face at an interior vertex")
        if len(face.path) == face.size:
            self._pending.append(face)

    def _close_face(self, face):
        a, b = face.path[0], face.path[-1]
        slot_a = self._free_slot_on(a, face)
        slot_b = self._free_slot_on(b, face)
        self._add_edge(a, slot_a, b, slot_b)
        face.closed = True
        face.path = list(face.path)
        ga = self._other_side(a, slot_a, face)
        gb = self._other_side(b, slot_b, face)
        ga, gb = _find(ga), _find(gb)
        if ga is not gb:
            if ga.size != gb.size:
                raise GraphError("face size mismatch at closure")
            if ga.closed or gb.closed:
                raise GraphError("closure touches a closed face")
            pa = ga.path if ga.path[-1] == a else ga.path[::-1]
            if pa[-1] != a:
                raise GraphError("outer face does not end at closure vertex")
            pb = gb.path if gb.path[0] == b else gb.path[::-1]
            if pb[0] != b:
                raise GraphError("outer face does not start at closure vertex")
            ga.path = pa + pb
            gb.rep = ga
            if len(ga.path) == ga.size:
                self._pending.append(ga)
        else:
            if not ga.closed and len(ga.path) == ga.size:
                self._pending.append(ga)

    def _free_slot_on(self, v, face):
        x = self._corner_of(v, face)
        slots = [x, (x + 1) % 3]
        free = [s for s in slots if self.nbr[v][s] is None]
        if len(free) != 1:
            raise GraphError("vertex is not ready to close this face")
        return free[0]

    def _other_side(self, v, slot, face):
        self._ensure_corners(v)
        left = _find(self.corner[v][slot])
        right = _find(self.corner[v][(slot - 1) % 3])
        if left is face:
            return right
        if right is face:
            return left
        raise GraphError("closing edge does not border its face")

    def _drain(self):
        while self._pending:
            face = _find(self._pending.popleft())
            if not face.closed and len(face.path) == face.size:
                self._close_face(face)

    def _fill_slot(self, v, i):
        if self.nbr[v][i] is not None:
            return
        self._ensure_corners(v)
        for c in (self.corner[v][i], self.corner[v][(i - 1) % 3]):
            f = _find(c)
            if not f.closed and len(f.path) == f.size:
                self._close_face(f)
                self._drain()
                if self.nbr[v][i] is not None:
                    return
        fl = _find(self.corner[v][i])
        fr = _find(self.corner[v][(i - 1) % 3])
        # the new vertex sees fr to the left of its return dart and fl to
        # its right, which pins its own counterclockwise face word
        thirds = []
        for w in self._words:
            if w[0] == fr.size and w[2] == fl.size and w not in thirds:
                thirds.append(w)
        if not thirds:
            raise GraphError("no face word fits the corner pair")
        if len({w[1] for w in thirds}) != 1:
            raise GraphError("ambiguous face word at new vertex")
        u = self._new_vertex(thirds[0], self.dist[v] + 1)
        self.corner[u][0] = fr
        self.corner[u][2] = fl
        self._add_edge(v, i, u, 0)
        self._extend_path(fl, v, u)
        self._extend_path(fr, v, u)
        self._drain()
        self._queue.append(u)

    def _grow(self):
        self._queue = deque([0])
        while self._queue:
            v = self._queue.popleft()
            if self.dist[v] >= self.radius:
                continue
            for i in range(3):
                self._fill_slot(v, i)

    def _to_ball(self):
        adj = []
        complete = []
        for v in range(len(self.nbr)):
            nbrs = [u for u in self.nbr[v] if u is not None]
            adj.append(nbrs)
            complete.append(len(nbrs) == 3)
        return GraphBall(adj, 0, complete, vertex_tags=list(self.dist))

    # -- rotation-system queries -------------------------------------------

    def slot(self, v, u):
        return self._slot[(v, u)]

    def left_face(self, v, u):
        return _find(self.corner[v][self.slot(v, u)])

    def right_face(self, v, u):
        return _find(self.corner[v][(self.slot(v, u) - 1) % 3])

    def edge_faces(self, v, u):
        return (self.left_face(v, u), self.right_face(v, u))

    def right_neighbor(self, b, came_from):
        """Continue from b turning right, having arrived from came_from."""
        r = self.slot(b, came_from)
        out = self.nbr[b][(r + 1) % 3]
        if out is None:
            raise GraphError(f"right turn at {b} leaves the disk")
        return out

    def left_neighbor(self, b, came_from):
        r = self.slot(b, came_from)
        out = self.nbr[b][(r + 2) % 3]
        if out is None:
            raise GraphError(f"left turn at {b} leaves the disk")
        return out

    def turn(self, a, b, c):
        """+1 if a->b->c turns right, -1 if left."""
        r = self.slot(b, a)
        e = self.slot(b, c)
        if e == (r + 1) % 3:
            return 1
        if e == (r + 2) % 3:
            return -1
        raise GraphError("not a walk turn")

    def faces(self):
        seen = []
        out = []
        for v in range(len(self.corner)):
            for c in self.corner[v]:
                if c is None:
                    continue
                f = _find(c)
                if not any(f is g for g in seen):
                    seen.append(f)
                    out.append(f)
        return out

    def closed_faces(self, size=None):
        return [f for f in self.faces()
                if f.closed and (size is None or f.size == size)]

    def boundary_cw(self, face):
        """Boundary cycle of a closed face in clockwise order (interior on
        the right of each dart)."""
        if not face.closed:
            raise GraphError("face is not closed")
        cyc = list(face.path)
        a, b = cyc[0], cyc[1]
        if self.right_face(a, b) is _find(face):
            return cyc
        return cyc[::-1]

    def face_of_vertex(self, v, size):
        self._ensure_corners(v)
        hits = []
        for c in self.corner[v]:
            f = _find(c)
            if f.size == size and not any(f is g for g in hits):
                hits.append(f)
        if len(hits) != 1:
            raise GraphError(f"vertex {v} lies on {len(hits)} faces of size {size}")
        return hits[0]


def generate_tiling(tv, radius):
    return Tiling(tv, radius)


# -- turn balance and enclosed faces ----------------------------------------

def rho(tiling, cycle):
    """Right minus left turns along the cycle, traversed clockwise."""
    k = len(cycle)
    if k < 3:
        raise GraphError("cycle too short")
    total = 0
    for i in range(k):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % k]
        total += tiling.turn(a, b, c)
    return abs(total)


def enclosed_faces(tiling, cycle):
    """Closed faces inside the cycle, by dual flood fill from its right side.

    The cycle is first oriented clockwise (nonnegative turn sum), so the
    enclosed region lies to the right of each dart.  Raises if the region
    reaches an unclosed face, i.e. the disk was too small."""
    k = len(cycle)
    total = sum(tiling.turn(cycle[i - 1], cycle[i], cycle[(i + 1) % k])
                for i in range(k))
    cyc = list(cycle) if total >= 0 else list(reversed(cycle))
    edge_set = {frozenset((cyc[i - 1], cyc[i])) for i in range(k)}
    seeds = []
    for i in range(k):
        f = tiling.right_face(cyc[i], cyc[(i + 1) % k])
        if not any(f is g for g in seeds):
            seeds.append(f)
    inside = list(seeds)
    queue = deque(seeds)
    while queue:
        f = queue.popleft()
        if not f.closed:
            raise GraphError("enclosed region leaves the generated disk")
        cyc_f = f.path
        for i in range(len(cyc_f)):
            a, b = cyc_f[i - 1], cyc_f[i]
            if frozenset((a, b)) in edge_set:
                continue
            g = tiling.left_face(a, b)
            if _find(g) is _find(f):
                g = tiling.right_face(a, b)
            g = _find(g)
            if not any(g is h for h in inside):
                inside.append(g)
                queue.append(g)
    return inside


@dataclass
class RhoCheck:
    cycle: tuple
    rho: int
    face_sum: int     # 6 + sum over enclosed faces of (size - 6)
    ok: bool


def check_l95_l96(tiling, cycles, lower=None):
    """Turn-balance identity and lower bound over a batch of cycles.

    For each cycle: rho(C) must equal 6 + sum(k(F) - 6) over enclosed
    faces.  If `lower` is given, additionally require rho(C) >= lower.
    Returns (reports, min_rho, all_ok)."""
    reports = []
    ok_all = True
    min_rho = None
    for cyc in cycles:
        r = rho(tiling, cyc)
        s = 6 + sum(f.size - 6 for f in enclosed_faces(tiling, cyc))
        good = (r == s) and (lower is None or r >= lower)
        reports.append(RhoCheck(cycle=tuple(cyc), rho=r, face_sum=s, ok=good))
        ok_all = ok_all and good
        min_rho = r if min_rho is None else min(min_rho, r)
    return reports, min_rho, ok_all


# -- family A: all faces equal, odd size ------------------------------------

_TRIPLE_SAME = {"HHV": True, "VHH": True, "HHH": False, "HVH": False,
                "VHV": False}


def caseA_injection(tiling, n):
    """Deterministic word-to-walk map for (m, m, m) tilings, odd m >= 7.

    The walk is steered purely by turns: the first turn is rightward, the
    second copies or flips it according to the first two letters, and every
    later turn copies or flips its predecessor according to the letter
    triple ending at it.  Returns walks aligned with eastward_words(n).
    """
    m = tiling.tv[0]
    if admissible_family(tiling.tv) != "A" or m % 2 == 0 or m < 7:
        raise GraphError("family A map needs (m, m, m) with odd m >= 7")
    root = 0
    pre = tiling.nbr[root][0]
    walks = []
    for word in eastward_words(n):
        turns = []
        for k in range(1, n + 1):
            if k == 1:
                turns.append(1)
            elif k == 2:
                same = word[0:2] == "HV"
                turns.append(turns[-1] if same else -turns[-1])
            else:
                same = _TRIPLE_SAME[word[k - 3:k]]
                turns.append(turns[-1] if same else -turns[-1])
        path = [pre, root]
        for t in turns:
            nxt = tiling.right_neighbor(path[-1], path[-2]) if t == 1 \
                else tiling.left_neighbor(path[-1], path[-2])
            path.append(nxt)
        walks.append(tuple(path[1:]))
    return walks


def turn_span(tiling, walk):
    """Largest |right - left| over contiguous turn subsequences of a walk."""
    pref = [0]
    for i in range(1, len(walk) - 1):
        pref.append(pref[-1] + tiling.turn(walk[i - 1], walk[i], walk[i + 1]))
    return max(pref) - min(pref)


# -- family B helpers: one even face contracted to a supergraph -------------

def _cw_positions(tiling, face):
    cyc = tiling.boundary_cw(face)
    return {v: i for i, v in enumerate(cyc)}


def _proj_turn(tiling, face, entry, exit_):
    """Turn of the contracted walk at a contracted face: +1 right, -1 left,
    0 straight, from the clockwise offset between entry and exit vertices."""
    pos = _cw_positions(tiling, face)
    k = face.size
    off = (pos[exit_] - pos[entry]) % k
    if off == k - 1:   # one step counterclockwise
        return 1
    if off == 1:       # one step clockwise
        return -1
    return 0


def caseB_injection(tiling, n):
    """Word-to-walk map for (4, 2n, 2p) tilings, p >= n >= 4.

    Squares are vertex-disjoint and contracting them leaves a 4-regular
    supergraph; the map chooses square/non-square edges by letter pairs and
    breaks ties with the most recent nonzero turn of the contracted walk.
    """
    sizes = sorted(tiling.tv)
    if sizes[0] != 4 or admissible_family(tiling.tv) != "C" or sizes[1] < 8:
        raise GraphError("family B map needs (4, 2n, 2p) with n >= 4")

    def is_square_edge(v, u):
        l, r = tiling.edge_faces(v, u)
        return l.size == 4 or r.size == 4

    def square_of(v):
        return _find(tiling.face_of_vertex(v, 4))

    def nonsquare_edge(v):
        outs = [u for u in tiling.nbr[v] if u is not None
                and not is_square_edge(v, u)]
        if len(outs) != 1:
            raise GraphError(f"vertex {v} lacks a unique non-square edge")
        return outs[0]

    def other_square_edge(v, used):
        outs = [u for u in tiling.nbr[v] if u is not None
                and u != used and is_square_edge(v, u)]
        if len(outs) != 1:
            raise GraphError(f"no unique second square edge at {v}")
        return outs[0]

    root = 0
    walks = []
    for word in eastward_words(n):
        path = [root, nonsquare_edge(root)]
        sq = [False, False]  # sq[k] tells whether edge e_k is square; e_0 unused
        sq[1] = False
        entry = path[1]
        proj = []

        def move_to(u):
            nonlocal entry
            v = path[-1]
            square = is_square_edge(v, u)
            if not square:
                proj.append(_proj_turn(tiling, square_of(v), entry, v))
                entry = u
            path.append(u)
            sq.append(square)

        def recent():
            for t in reversed(proj):
                if t:
                    return t
            return 0

        for k in range(2, n + 1):
            pair = word[k - 2:k]
            v, p = path[-1], path[-2]
            if pair == "HV":
                if sq[k - 1]:
                    move_to(other_square_edge(v, p))
                else:
                    t = recent()
                    go_left = t == 0 or t < 0
                    move_to(tiling.left_neighbor(v, p) if go_left
                            else tiling.right_neighbor(v, p))
            elif pair == "HH":
                if sq[k - 1]:
                    move_to(nonsquare_edge(v))
                else:
                    t = recent()
                    go_right = t == 0 or t < 0
                    move_to(tiling.right_neighbor(v, p) if go_right
                            else tiling.left_neighbor(v, p))
            else:  # "VH"
                if not sq[k - 1]:
                    raise GraphError("V step must ride a square edge")
                if sq[k - 2]:
                    move_to(nonsquare_edge(v))
                else:
                    move_to(other_square_edge(v, p))
        walks.append(tuple(path))
    return walks


def caseB_projection_spans(tiling, n):
    """Max |right - left| over contiguous turn stretches of each contracted
    walk produced by the family-B map; the balance lemma says <= 1."""
    spans = []
    for walk in caseB_injection(tiling, n):
        turns = _replay_projection(tiling, walk, 4)
        pref = [0]
        for t in turns:
            pref.append(pref[-1] + t)
        spans.append(max(pref) - min(pref))
    return spans


def _replay_projection(tiling, walk, small):
    """Contracted-walk turns of a walk, recorded at each small-face exit."""

    def small_edge(v, u):
        l, r = tiling.edge_faces(v, u)
        return l.size == small or r.size == small

    turns = []
    entry = None
    for i in range(1, len(walk)):
        v, u = walk[i - 1], walk[i]
        if not small_edge(v, u):
            if entry is not None:
                face = _find(tiling.face_of_vertex(v, small))
                turns.append(_proj_turn(tiling, face, entry, v))
            entry = u
        if i == 1 and not small_edge(v, u):
            entry = u
    return turns


# -- family C with a pentagon: midpoint walks -------------------------------

def caseD_injection(tiling, n):
    """Word-to-midpoint-walk map for the (5, 8, 8) tiling.

    Walks live on edge midpoints of the tiling (equivalently on the
    subdivided graph); pentagons are vertex-disjoint and the running turn
    balance of the pentagon-contracted walk steers every binary choice.
    Returned walks alternate midpoints and vertices of the tiling:
    (m_0, b_1, m_1, ..., b_n, m_n).
    """
    if sorted(tiling.tv) != [5, 8, 8]:
        raise GraphError("midpoint map is for the (5, 8, 8) tiling")

    def is_pent_edge(v, u):
        l, r = tiling.edge_faces(v, u)
        return l.size == 5 or r.size == 5

    def pentagon_of(v):
        return _find(tiling.face_of_vertex(v, 5))

    def nonpent_partner(v):
        outs = [u for u in tiling.nbr[v] if u is not None
                and not is_pent_edge(v, u)]
        if len(outs) != 1:
            raise GraphError(f"vertex {v} lacks a unique non-pentagon edge")
        return outs[0]

    def other_pent_edge(v, used):
        outs = [u for u in tiling.nbr[v] if u is not None
                and u != used and is_pent_edge(v, u)]
        if len(outs) != 1:
            raise GraphError(f"no unique second pentagon edge at {v}")
        return outs[0]

    root = 0
    u0 = nonpent_partner(root)
    walks = []
    for word in eastward_words(n):
        # path alternates vertices and crossing choices; keep the vertex
        # sequence root, u0, b2, ... and read midpoints off the edges
        verts = [root, u0]
        pent = [False]      # pent[k] for midpoint pi_k
        entry = u0
        rho_run = 0

        def cross(u):
            nonlocal entry, rho_run
            v = verts[-1]
            p = is_pent_edge(v, u)
            if not p:
                rho_run += _proj_turn(tiling, pentagon_of(v), entry, v)
                entry = u
            verts.append(u)
            pent.append(p)

        # pinned first step: rightward turn
        cross(tiling.right_neighbor(u0, root))

        for k in range(2, n + 1):
            pair = word[k - 2:k]
            v, p = verts[-1], verts[-2]
            if pair == "HV":
                if pent[k - 1]:
                    cross(other_pent_edge(v, p))
                else:
                    go_left = rho_run < 0
                    cross(tiling.left_neighbor(v, p) if go_left
                          else tiling.right_neighbor(v, p))
            elif pair == "HH":
                if pent[k - 1]:
                    cross(nonpent_partner(v))
                else:
                    go_right = rho_run < 0
                    cross(tiling.right_neighbor(v, p) if go_right
                          else tiling.left_neighbor(v, p))
            else:  # "VH"
                if not pent[k - 1]:
                    raise GraphError("V step must ride a pentagon edge")
                if pent[k - 2]:
                    cross(nonpent_partner(v))
                else:
                    cross(other_pent_edge(v, p))
        # interleave midpoints (as frozensets) with vertices
        out = []
        for i in range(1, len(verts)):
            out.append(frozenset((verts[i - 1], verts[i])))
            if i < len(verts) - 1:
                out.append(verts[i])
        walks.append(tuple(out))
    return walks


# -- family C with hexagons: lifting supergraph walks -----------------------

class HexagonLift:
    """Hexagon/square structure of a (4, 6, 2p) tiling, p >= 6.

    Hexagons become supergraph vertices, squares its edges; every step of a
    supergraph walk lifts to exactly four walks in the tiling (two arcs
    around the current hexagon times two crossing vertices of the square).
    """

    def __init__(self, tiling):
        sizes = sorted(tiling.tv)
        if sizes[0] != 4 or sizes[1] != 6 or sizes[2] < 12:
            raise GraphError("hexagon lifting needs a (4, 6, 2p) tiling, p >= 6")
        self.t = tiling
        self.hexagons = tiling.closed_faces(6)
        self.squares = tiling.closed_faces(4)
        self._hex_index = {id(f): i for i, f in enumerate(self.hexagons)}
        self.adj = {}        # hexagon index -> list of (other index, square)
        for s in self.squares:
            ends = []
            cyc = s.path
            for i in range(4):
                a, b = cyc[i - 1], cyc[i]
                l, r = tiling.edge_faces(a, b)
                other = r if _find(l) is _find(s) else l
                if other.size == 6 and other.closed:
                    ends.append((self._hex_index.get(id(_find(other))), (a, b)))
            if len(ends) == 2 and None not in (ends[0][0], ends[1][0]):
                h1, e1 = ends[0]
                h2, e2 = ends[1]
                self.adj.setdefault(h1, []).append((h2, s))
                self.adj.setdefault(h2, []).append((h1, s))

    def hexagon_of_vertex(self, v):
        f = _find(self.t.face_of_vertex(v, 6))
        return self._hex_index[id(f)]

    def square_of_vertex(self, v):
        return _find(self.t.face_of_vertex(v, 4))

    def crossing(self, hex_idx, square):
        """((h_i, h_i+1), (x, y)): the square's edge on this hexagon and the
        matching far-side vertices, aligned so h_i-x and h_i+1-y are edges."""
        hexa = self.hexagons[hex_idx]
        hv = set(hexa.path)
        cyc = square.path
        ours = [v for v in cyc if v in hv]
        if len(ours) != 2:
            raise GraphError("square does not cross this hexagon cleanly")
        i = cyc.index(ours[0])
        # rotate the 4-cycle so it starts with the on-hexagon pair
        for r in range(4):
            rot = cyc[r:] + cyc[:r]
            if rot[0] in hv and rot[1] in hv:
                return (rot[0], rot[1]), (rot[3], rot[2])
        raise GraphError("square's hexagon pair is not consecutive")

    def step_lifts(self, v, hex_idx, square):
        """The four lifted paths of one supergraph step, starting after v."""
        hexa = self.hexagons[hex_idx]
        cyc = hexa.path
        k = len(cyc)
        pos = {x: i for i, x in enumerate(cyc)}
        (h0, h1), (x, y) = self.crossing(hex_idx, square)
        lifts = []
        for target, land in ((h0, x), (h1, y)):
            delta = (pos[target] - pos[v]) % k
            fwd = [cyc[(pos[v] + s) % k] for s in range(1, delta + 1)]
            bwd = [cyc[(pos[v] - s) % k] for s in range(1, k - delta + 1)]
            lifts.append(fwd + [land])
            lifts.append(bwd + [land])
        return lifts


def caseC_verify_lifts(tiling, max_steps, start_vertex=0):
    """Check that every lift of every short supergraph walk is self-avoiding.

    Runs a joint DFS over supergraph walks from the hexagon of the start
    vertex (first step away from the start vertex's own square) and all
    4^steps lift choices, confirming self-avoidance incrementally.  Returns
    (walks_checked, lifts_checked, first_step_length_multisets).
    """
    lift = HexagonLift(tiling)
    h0 = lift.hexagon_of_vertex(start_vertex)
    own = lift.square_of_vertex(start_vertex)
    walks = 0
    lifts = 0
    first_lens = set()
    occ = {start_vertex}
    path = [start_vertex]

    def go(v, hex_idx, visited, steps):
        nonlocal walks, lifts
        walks += 1
        if steps == max_steps:
            return
        for nxt, square in lift.adj.get(hex_idx, []):
            if nxt in visited:
                continue
            if steps == 0 and square is own:
                continue
            for piece in lift.step_lifts(v, hex_idx, square):
                if steps == 0:
                    first_lens.add(len(piece))
                if any(p in occ for p in piece):
                    raise GraphError(
                        f"lift revisits a vertex: {path + piece}")
                lifts += 1
                occ.update(piece)
                path.extend(piece)
                go(piece[-1], nxt, visited | {nxt}, steps + 1)
                for p in piece:
                    occ.discard(p)
                del path[len(path) - len(piece):]

    go(start_vertex, h0, {h0}, 0)
    return walks, lifts, first_lens


def caseC_first_step_length_sets(tiling, start_vertex=0):
    """Multisets of lift lengths for each admissible first supergraph step."""
    lift = HexagonLift(tiling)
    h0 = lift.hexagon_of_vertex(start_vertex)
    own = lift.square_of_vertex(start_vertex)
    sets = []
    for nxt, square in lift.adj.get(h0, []):
        if square is own:
            continue
        lens = sorted(len(p) for p in lift.step_lifts(start_vertex, h0, square))
        sets.append(tuple(lens))
    return sets
