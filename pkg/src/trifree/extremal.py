"""The tight family built from C5 by repeated path-diamond replacements.

A diamond is a 5-cycle u1-z1-z2-u2-w with degrees (3, 2, 2, 3, 3), an apex
x1 adjacent to both u1 and u2, and x2 the third neighbor of w.  Replacing
the diamond by the path x1-v1-v2-x2 removes three vertices and drops the
independence number by exactly one, which drives both membership testing
and the constructive maximum-set routines here.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import networkx as nx

from . import verify
from .plane_graph import (GraphError, InternalInvariantError, PlaneGraph,
                          cycle_graph, isomorphic_small, path_graph)

P2 = "P2"
C5 = "C5"
NOT_MEMBER = "NOT_MEMBER"


@dataclass(frozen=True, order=True)
class Diamond:
    u1: int
    z1: int
    z2: int
    u2: int
    w: int
    x1: int
    x2: int

    @property
    def cycle(self) -> tuple:
        return (self.u1, self.z1, self.z2, self.u2, self.w)

    def cycle_edges(self) -> frozenset:
        c = self.cycle
        return frozenset(frozenset((c[i], c[(i + 1) % 5])) for i in range(5))


@dataclass(frozen=True)
class MembershipStep:
    diamond: Diamond
    x1: int
    v1: int
    v2: int
    x2: int

    def serialize(self) -> str:
        d = self.diamond
        return "replace %d %d %d %d %d -> path %d %d %d %d" % (
            d.u1, d.z1, d.z2, d.u2, d.w, self.x1, self.v1, self.v2, self.x2)


@dataclass(frozen=True)
class MembershipTrace:
    steps: tuple
    terminal: str

    @property
    def is_member(self) -> bool:
        return self.terminal in (P2, C5)

    def serialize(self) -> str:
        lines = [s.serialize() for s in self.steps]
        lines.append("terminal %s" % self.terminal)
        return "\n".join(lines) + "\n"


def _check_diamond(g: PlaneGraph, d: Diamond) -> bool:
    c = d.cycle
    if len(set(c)) != 5 or d.x1 in c or d.x2 in c:
        return False
    if not all(g.has_vertex(v) for v in c + (d.x1, d.x2)):
        return False
    for i in range(5):
        if not g.has_edge(c[i], c[(i + 1) % 5]):
            return False
    if not (g.has_edge(d.x1, d.u1) and g.has_edge(d.x1, d.u2) and g.has_edge(d.x2, d.w)):
        return False
    degs = (g.degree(d.u1), g.degree(d.z1), g.degree(d.z2), g.degree(d.u2), g.degree(d.w))
    return degs == (3, 2, 2, 3, 3)


def find_diamonds(g: PlaneGraph) -> list:
    """All diamonds, once up to the u1<->u2 / z1<->z2 reflection."""
    out = set()
    for cyc in g.cycles_up_to(5):
        if len(cyc) != 5:
            continue
        for shift in range(5):
            for walk in (cyc, tuple(reversed(cyc))):
                u1, z1, z2, u2, w = (walk[(shift + j) % 5] for j in range(5))
                if u2 < u1:
                    continue
                if (g.degree(u1), g.degree(z1), g.degree(z2),
                        g.degree(u2), g.degree(w)) != (3, 2, 2, 3, 3):
                    continue
                cset = {u1, z1, z2, u2, w}
                x1s = [x for x in g.neighbors(u1) if x not in cset]
                if x1s != [x for x in g.neighbors(u2) if x not in cset]:
                    continue
                x2s = [x for x in g.neighbors(w) if x not in cset]
                if len(x1s) == 1 and len(x2s) == 1:
                    out.add(Diamond(u1, z1, z2, u2, w, x1s[0], x2s[0]))
    return sorted(out)


def _splice(rot, old, new):
    """Replace one entry of a rotation tuple by a sequence."""
    i = rot.index(old)
    return rot[:i] + tuple(new) + rot[i + 1:]


def replace_diamond_with_path(g: PlaneGraph, d: Diamond) -> PlaneGraph:
    """Delete the diamond's five cycle vertices, add the path x1-v1-v2-x2."""
    if not _check_diamond(g, d):
        raise GraphError("not a diamond of this graph: %r" % (d,))
    v1 = g.max_vertex_id() + 1
    v2 = v1 + 1
    removed = set(d.cycle)
    # the diamond's degree pattern pins every cycle-vertex neighbor, so only
    # the rotations at x1 and x2 mention removed vertices
    base = {v: g.rotation(v) for v in g.vertices if v not in removed}
    base[d.x2] = _splice(base[d.x2], d.w, (v2,))
    rx1 = base[d.x1]
    deg = len(rx1)
    i1, i2 = rx1.index(d.u1), rx1.index(d.u2)
    candidates = []
    if (i1 + 1) % deg == i2 or (i2 + 1) % deg == i1:
        # contiguous block: v1 takes its place
        drop, keep = (d.u2, d.u1) if (i1 + 1) % deg == i2 else (d.u1, d.u2)
        shrunk = tuple(u for u in rx1 if u != drop)
        candidates.append(_splice(shrunk, keep, (v1,)))
    else:
        for keep, drop in ((d.u1, d.u2), (d.u2, d.u1)):
            shrunk = tuple(u for u in rx1 if u != drop)
            candidates.append(_splice(shrunk, keep, (v1,)))
    last_err = None
    for cand in candidates:
        rot = dict(base)
        rot[d.x1] = cand
        rot[v1] = (d.x1, v2)
        rot[v2] = (v1, d.x2)
        try:
            return PlaneGraph(rot)
        except GraphError as e:
            last_err = e
    raise InternalInvariantError("diamond removal broke the embedding: %s" % last_err)


def path_diamond_replacement(g: PlaneGraph, path) -> PlaneGraph:
    """Exact inverse construction: grow a path x1-v1-v2-x2 into a diamond."""
    x1, v1, v2, x2 = path
    for a, b in ((x1, v1), (v1, v2), (v2, x2)):
        if not (g.has_vertex(a) and g.has_edge(a, b)):
            raise GraphError("not a path of this graph: %r" % (path,))
    if g.degree(v1) != 2 or g.degree(v2) != 2:
        raise GraphError("path interior must have degree 2: %r" % (path,))
    base_id = g.max_vertex_id()
    u1, z1, z2, u2, w = range(base_id + 1, base_id + 6)
    base = {v: g.rotation(v) for v in g.vertices if v not in (v1, v2)}
    base[x2] = _splice(base[x2], v2, (w,))
    rx1 = base[x1]
    last_err = None
    for block in ((u1, u2), (u2, u1)):
        for r_u1 in ((x1, z1, w), (x1, w, z1)):
            for r_u2 in ((x1, z2, w), (x1, w, z2)):
                for r_w in ((u1, u2, x2), (u2, u1, x2)):
                    rot = dict(base)
                    rot[x1] = _splice(rx1, v1, block)
                    rot[u1] = r_u1
                    rot[u2] = r_u2
                    rot[w] = r_w
                    rot[z1] = (u1, z2)
                    rot[z2] = (z1, u2)
                    try:
                        return PlaneGraph(rot)
                    except GraphError as e:
                        last_err = e
    raise InternalInvariantError("no planar diamond insertion found: %s" % last_err)


def _degree2_paths(g: PlaneGraph) -> list:
    """All paths x1-v1-v2-x2 with both interior vertices of degree 2."""
    out = []
    for v1 in g.vertices:
        if g.degree(v1) != 2:
            continue
        for v2 in sorted(g.neighbors(v1)):
            if v2 < v1 or g.degree(v2) != 2:
                continue
            for x1 in sorted(g.neighbors(v1) - {v2}):
                for x2 in sorted(g.neighbors(v2) - {v1}):
                    if x1 != x2:
                        out.append((x1, v1, v2, x2))
    return out


def _quick_reject(g: PlaneGraph) -> bool:
    if g.n == 2:
        return False
    if g.n < 5 or g.n % 3 != 2:
        return True
    return not g.is_connected()


class _IsoMemo:
    """Negative cache for membership search, keyed up to isomorphism."""

    def __init__(self):
        self.buckets = {}

    def _key(self, g: PlaneGraph):
        return (g.n, g.m, nx.weisfeiler_lehman_graph_hash(g.to_networkx()))

    def seen(self, g: PlaneGraph) -> bool:
        for h in self.buckets.get(self._key(g), ()):
            if nx.is_isomorphic(g.to_networkx(), h):
                return True
        return False

    def add(self, g: PlaneGraph):
        self.buckets.setdefault(self._key(g), []).append(g.to_networkx())


def is_member(g: PlaneGraph) -> MembershipTrace:
    """Decide family membership with a backtracking replacement search."""
    memo = _IsoMemo()

    def search(h: PlaneGraph):
        if h.n == 2 and h.m == 1:
            return MembershipTrace((), P2)
        if h.n == 5 and h.m == 5 and isomorphic_small(h, cycle_graph(5)):
            return MembershipTrace((), C5)
        if _quick_reject(h) or memo.seen(h):
            return None
        for d in find_diamonds(h):
            reduced = replace_diamond_with_path(h, d)
            v1 = h.max_vertex_id() + 1
            sub = search(reduced)
            if sub is not None:
                step = MembershipStep(d, d.x1, v1, v1 + 1, d.x2)
                return MembershipTrace((step,) + sub.steps, sub.terminal)
        memo.add(h)
        return None

    found = search(g)
    return found if found is not None else MembershipTrace((), NOT_MEMBER)


def generate_member(steps: int, seed) -> PlaneGraph:
    """A random family member with 5 + 3*steps vertices; deterministic per seed."""
    if steps < 0:
        raise GraphError("steps must be non-negative")
    rng = random.Random(seed)
    g = cycle_graph(5)
    for _ in range(steps):
        paths = _degree2_paths(g)
        if not paths:
            raise InternalInvariantError("member lost all degree-2 paths")
        g = path_diamond_replacement(g, rng.choice(paths))
    # replacements leave gaps in the label range; restore vertices 1..n
    return g.relabel({v: i + 1 for i, v in enumerate(sorted(g.vertices))})


def _replay(g: PlaneGraph, trace: MembershipTrace) -> list:
    """Graphs along the trace, from g down to the terminal."""
    graphs = [g]
    for step in trace.steps:
        nxt = replace_diamond_with_path(graphs[-1], step.diamond)
        if not (nxt.has_vertex(step.v1) and nxt.has_vertex(step.v2)):
            raise GraphError("trace does not replay on this graph")
        graphs.append(nxt)
    return graphs


def _terminal_set(g: PlaneGraph, terminal: str) -> frozenset:
    vs = g.vertices
    if terminal == P2:
        return frozenset((vs[0],))
    for a, b in itertools.combinations(vs, 2):
        if not g.has_edge(a, b):
            return frozenset((a, b))
    raise GraphError("terminal graph is not a 5-cycle")


def _lift_through(step: MembershipStep, s: frozenset) -> frozenset:
    d = step.diamond
    out = set(s)
    if step.v1 in out:
        out.discard(step.v1)
        out.add(d.u1)
    if step.v2 in out:
        out.discard(step.v2)
        out.add(d.w)
    out.add(d.z2)
    return frozenset(out)


def member_max_independent_set(g: PlaneGraph, trace: MembershipTrace) -> frozenset:
    """An independent set of the exact extremal size (n+1)/3, built by lifting."""
    if not trace.is_member:
        raise GraphError("trace does not certify membership")
    graphs = _replay(g, trace)
    s = _terminal_set(graphs[-1], trace.terminal)
    for step, host in zip(reversed(trace.steps), reversed(graphs[:-1])):
        s = _lift_through(step, s)
        bad = verify.violating_edge(host, s)
        if bad is not None:
            raise InternalInvariantError("lift produced dependent pair %r" % (bad,))
    if 3 * len(s) != g.n + 1:
        raise InternalInvariantError("lifted set has size %d != (n+1)/3" % len(s))
    return s


def _qualifying_diamonds(g: PlaneGraph, face_vertices: frozenset) -> list:
    return [d for d in find_diamonds(g) if not (set(d.cycle) & face_vertices)]


def _exact_avoiding(g: PlaneGraph, avoid: frozenset, size: int):
    """Brute-force base case: independent set of given size avoiding ``avoid``."""
    from .solver import exact_alpha
    sub = g.delete_vertices(avoid)
    alpha, witness = exact_alpha(sub)
    if alpha < size:
        return None
    if alpha == size:
        return witness
    # trim a larger witness greedily; any subset of an independent set works
    return frozenset(sorted(witness)[:size])


def avoiding_independent_set(g: PlaneGraph, f) -> frozenset:
    """Maximum independent set of a family member avoiding all of V(f).

    Precondition: g is a family member and f is a face not incident with any
    vertex of degree at most two.
    """
    face_vs = f.vertex_set if hasattr(f, "vertex_set") else frozenset(f)
    if any(g.degree(v) <= 2 for v in face_vs):
        raise GraphError("face is incident with a vertex of degree at most two")
    size = (g.n + 1) // 3

    def recurse(h: PlaneGraph, face, want: int):
        fv = face.vertex_set
        if h.n <= 11:
            return _exact_avoiding(h, fv, want)
        for d in _qualifying_diamonds(h, fv):
            if d.x1 in fv and h.degree(d.x1) <= 3:
                continue  # replacement would drop a face vertex to degree 2
            reduced = replace_diamond_with_path(h, d)
            new_face = reduced.find_face(face.vertex_walk())
            if new_face is None or new_face.darts != face.darts:
                continue
            v1 = h.max_vertex_id() + 1
            sub = recurse(reduced, new_face, want - 1)
            if sub is not None:
                step = MembershipStep(d, d.x1, v1, v1 + 1, d.x2)
                return _lift_through(step, sub)
        return None

    face = g.find_face(f.vertex_walk() if hasattr(f, "vertex_walk") else tuple(f))
    if face is None:
        raise GraphError("not a face of this graph: %r" % (f,))
    s = recurse(g, face, size)
    if s is None:
        raise InternalInvariantError(
            "no avoiding set found; input is not a qualifying family member")
    bad = verify.violating_edge(g, s)
    if bad is not None:
        raise InternalInvariantError("avoiding set is not independent: %r" % (bad,))
    if s & face.vertex_set or len(s) != size:
        raise InternalInvariantError("avoiding set violates its contract")
    return frozenset(s)
