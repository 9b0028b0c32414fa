"""The first self-similar torsion group on the binary tree and its walks.

Generators a, b, c, d act on binary strings: a flips the first bit, and
b = (a, c), c = (a, d), d = (1, b) act by those sections on the two
subtrees.  The module provides the word problem (reduction through the
Klein four-group {1, b, c, d} plus section recursion), Cayley-graph balls
with exact element identification, the one-ended orbit graph of the
all-ones ray, and a family of words whose walks in the Cayley graph are
self-avoiding with growth rate the golden ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graphball import GraphBall, GraphError

GENERATORS = "abcd"

# second letter of the Klein product, e.g. b*c = d
_KLEIN = {"bc": "d", "cb": "d", "bd": "c", "db": "c", "cd": "b", "dc": "b"}

# sections on the two subtrees; "" is the identity
_SECTIONS = {"b": ("a", "c"), "c": ("a", "d"), "d": ("", "b")}


def reduce_word(word):
    """Cancel squares and fold {b, c, d} pairs through the Klein table."""
    out = []
    for ch in word:
        if ch not in GENERATORS:
            raise GraphError(f"unknown generator {ch!r}")
        while True:
            if out and out[-1] == ch:
                out.pop()
                break
            if out and ch != "a" and out[-1] != "a":
                ch = _KLEIN[out[-1] + ch]
                out.pop()
                continue
            out.append(ch)
            break
    return "".join(out)


def act_letter(letter, s):
    if letter == "a":
        return ("1" if s[0] == "0" else "0") + s[1:] if s else s
    out = []
    g = letter
    i = 0
    while g and i < len(s):
        x = s[i]
        if g == "a":
            out.append("1" if x == "0" else "0")
            out.append(s[i + 1:])
            return "".join(out) + ""
        g0, g1 = _SECTIONS[g]
        out.append(x)
        g = g0 if x == "0" else g1
        i += 1
    out.append(s[i:])
    return "".join(out)


def act(word, s):
    """Image of the string s under the word, rightmost letter applied first."""
    for letter in reversed(word):
        s = act_letter(letter, s)
    return s


def _sections_of(word):
    """Sections (w0, w1) of an even-a reduced word on the two subtrees."""
    p = 0
    s0 = []
    s1 = []
    for ch in word:
        if ch == "a":
            p ^= 1
        else:
            g0, g1 = _SECTIONS[ch]
            s0.append(g1 if p else g0)
            s1.append(g0 if p else g1)
    return "".join(s0), "".join(s1)


_id_memo = {}


def is_identity(word):
    """Exact word problem, by Klein reduction and section recursion."""
    w = reduce_word(word)
    if not w:
        return True
    if w.count("a") % 2 == 1:
        return False
    hit = _id_memo.get(w)
    if hit is not None:
        return hit
    if len(w) == 1:
        ans = False
    else:
        w0, w1 = _sections_of(w)
        ans = is_identity(w0) and is_identity(w1)
    _id_memo[w] = ans
    return ans


def equal_elements(u, v):
    """Whether two words represent the same group element."""
    return is_identity(u + v[::-1])


def identity_witness(word, max_level):
    """A string the word moves, or None if it fixes all strings up to the
    given length.  Searches level by level with early exit."""
    for level in range(1, max_level + 1):
        for i in range(2 ** level):
            s = format(i, f"0{level}b")
            if act(word, s) != s:
                return s
    return None


# -- Cayley-graph balls -----------------------------------------------------

def _fingerprint(word, depth):
    return tuple(act(word, format(i, f"0{depth}b")) for i in range(2 ** depth))


def cayley_ball(radius, gens="abc", depth=None):
    """Ball in the cubic Cayley graph with generating set {a, b, c}.

    d = bc is redundant as a generator; dropping it keeps the graph cubic
    and of girth 4.  Elements are identified by their action on all strings
    of the probe depth, confirmed exactly through the word problem.
    Returns a GraphBall whose edge labels are the generators and whose
    vertex tags are shortest words.
    """
    if depth is None:
        depth = 2 * radius + 2
    words = [""]
    dist = [0]
    index = {_fingerprint("", depth): 0}
    adj = [[] for _ in range(1)]
    labels = {}
    frontier = [0]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for s in gens:
                w = reduce_word(words[v] + s)
                fp = _fingerprint(w, depth)
                u = index.get(fp)
                if u is not None and not equal_elements(w, words[u]):
                    raise GraphError("probe depth too small for this radius")
                if u is None:
                    u = len(words)
                    index[fp] = u
                    words.append(w)
                    dist.append(dist[v] + 1)
                    adj.append([])
                    nxt.append(u)
                if u not in adj[v]:
                    adj[v].append(u)
                    adj[u].append(v)
                    labels[(v, u)] = s
                    labels[(u, v)] = s
        frontier = nxt
    complete = [d < radius for d in dist]
    return GraphBall(adj, 0, complete, edge_labels=labels,
                     vertex_tags=list(words))


# -- the orbit graph of the all-ones ray ------------------------------------

def pad_ray(s, length):
    return s + "1" * max(0, length - len(s))


def act_ray(word, s):
    """Action on a cofinal-ones string, in stripped finite form."""
    t = act(word, pad_ray(s, len(s) + len(word) + 4))
    return t.rstrip("1")


class SchreierGraph:
    """Orbit graph of the all-ones ray under {a, b, c, d}.

    Unlike ordinary balls this graph carries loops (generators fixing a
    point), so it keeps one labelled dart per generator per vertex.
    """

    def __init__(self, radius):
        self.points = [""]
        self.index = {"": 0}
        self.dist = [0]
        self.darts = []
        frontier = [0]
        for _ in range(radius):
            nxt = []
            for v in frontier:
                self._expand(v, nxt)
            frontier = nxt
        for v in frontier:
            self._expand(v, [])
        self.complete = [d < radius for d in self.dist]

    def _expand(self, v, nxt):
        while len(self.darts) <= v:
            self.darts.append(None)
        if self.darts[v] is not None:
            return
        row = {}
        for s in GENERATORS:
            img = act_ray(s, self.points[v])
            u = self.index.get(img)
            if u is None:
                u = len(self.points)
                self.index[img] = u
                self.points.append(img)
                self.dist.append(self.dist[v] + 1)
                nxt.append(u)
            row[s] = u
        self.darts[v] = row

    def step(self, v, s):
        return self.darts[v][s]

    def fixers(self, v):
        return "".join(s for s in "bcd" if self.darts[v][s] == v)


def classify_section(schreier, v):
    """Vertex type of an orbit point, from which of b, c, d fix it."""
    fixed = schreier.fixers(v)
    if fixed == "bcd":
        return "root"
    if len(fixed) != 1:
        raise GraphError(f"unexpected stabilizer pattern {fixed!r}")
    return {"d": "a-prime", "c": "b", "b": "c"}[fixed]


# blocks appended per vertex type; each block ends with an a-step
SECTION_WORDS = {
    "root": ("ba", "ca"),
    "a-prime": ("ba", "ca", "bcba", "cbca"),
    "b": ("ba", "cba", "bca", "cbca"),
    "c": ("ca", "bca", "cba", "bcba"),
}


def weight_Z1(z):
    """Block weight of an a-prime vertex: 2z^2 + 2z^4."""
    return 2.0 * z ** 2 + 2.0 * z ** 4


def weight_Z2(z):
    """Block weight of a type-b or type-c vertex: z^2 + 2z^3 + z^4."""
    return z ** 2 + 2.0 * z ** 3 + z ** 4


def generate_words(schreier, n):
    """All block concatenations of length <= n, keyed by exact length.

    Starting at the ray origin, each vertex type contributes its block set
    and the orbit position advances by the block letters.
    """
    out = {k: [] for k in range(n + 1)}

    def go(pos, word):
        if word:
            out[len(word)].append(word)
        for block in SECTION_WORDS[classify_section(schreier, pos)]:
            if len(word) + len(block) > n:
                continue
            q = pos
            for ch in block:
                q = schreier.step(q, ch)
            go(q, word + block)

    go(0, "")
    return out


@dataclass
class LiftReport:
    words: int
    steps: int
    all_saw: bool
    bad_word: str | None


def lift_and_verify(words, depth=12):
    """Check that each word's walk in the Cayley graph is self-avoiding.

    The walk visits the partial products of the letters (latest letter
    composed on the left); vertices are compared by fingerprint on all
    strings of the probe depth, with collisions settled exactly."""
    probes = [format(i, f"0{depth}b") for i in range(0, 2 ** depth,
                                                     max(1, 2 ** depth // 64))]
    total_steps = 0
    for word in words:
        state = tuple(probes)
        seen = {state: 0}
        for i, ch in enumerate(word):
            state = tuple(act_letter(ch, s) for s in state)
            total_steps += 1
            j = seen.get(state)
            if j is not None:
                # exact confirmation: rev(prefix_i) * prefix_j must not be 1
                if is_identity(word[:i + 1][::-1] + word[:j]):
                    return LiftReport(words=len(words), steps=total_steps,
                                      all_saw=False, bad_word=word)
            seen[state] = i + 1
    return LiftReport(words=len(words), steps=total_steps, all_saw=True,
                      bad_word=None)


def count_walk_prefixes(schreier, n):
    """Number of distinct length-n prefixes of the block words.

    Every prefix of a lifted walk is itself a self-avoiding walk, so this
    counts the walks of length exactly n that the family yields."""
    prefixes = set()

    def go(pos, word):
        if len(word) >= n:
            prefixes.add(word[:n])
            return
        for block in SECTION_WORDS[classify_section(schreier, pos)]:
            q = pos
            for ch in block:
                q = schreier.step(q, ch)
            go(q, word + block)

    go(0, "")
    return len(prefixes)


def word_count_growth(schreier, n):
    """(number of distinct length-n walk prefixes)^(1/n)."""
    return count_walk_prefixes(schreier, n) ** (1.0 / n)
