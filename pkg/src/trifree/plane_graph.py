"""Plane graph substrate: rotation systems, faces, and small-graph queries.

A plane graph is stored as a rotation system: for every vertex, the cyclic
clockwise order of its neighbors.  Faces are traced with the next-edge rule
and validity (genus zero) is checked per connected component via Euler's
formula.  Graphs are immutable; every operation returns a new value.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx


class GraphError(ValueError):
    """Malformed input or violated operation precondition."""


class InternalInvariantError(RuntimeError):
    """A guarantee the algorithms rely on failed; indicates an upstream bug."""


def _canonical_walk(darts):
    """Rotate a cyclic dart sequence so it starts at the smallest dart."""
    i = min(range(len(darts)), key=lambda k: darts[k])
    return tuple(darts[i:]) + tuple(darts[:i])


@dataclass(frozen=True)
class Face:
    """A face walk, stored as a canonically rotated cyclic dart sequence.

    The walk may repeat vertices and traverse a bridge twice, so ``length``
    counts edge incidences (the standard |f|).
    """

    darts: tuple

    @staticmethod
    def from_walk(darts) -> "Face":
        return Face(_canonical_walk(tuple(darts)))

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(d[0] for d in self.darts)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(frozenset(d) for d in self.darts)

    def vertex_walk(self) -> tuple:
        return tuple(d[0] for d in self.darts)

    def is_cycle(self) -> bool:
        """True iff the walk visits ``length`` distinct vertices.

        A length-2 walk traverses one edge twice, so it never qualifies.
        """
        return self.length >= 3 and len(self.vertex_set) == self.length

    def __repr__(self):
        return "Face(%s)" % "-".join(str(v) for v in self.vertex_walk())


class PlaneGraph:
    """Immutable combinatorial plane embedding."""

    __slots__ = ("_rot", "_nbr", "_faces", "_face_keys", "_outer", "_dart_face")

    def __init__(self, rotation, outer_face=None, check=True):
        self._rot = {int(v): tuple(int(u) for u in ns) for v, ns in rotation.items()}
        self._nbr = {v: frozenset(ns) for v, ns in self._rot.items()}
        if check:
            self._check_simple_symmetric()
        self._trace_faces()
        if check:
            self._check_euler()
        self._outer = None
        if outer_face is not None:
            key = outer_face.darts if isinstance(outer_face, Face) else _canonical_walk(tuple(outer_face))
            if key not in self._face_keys:
                raise GraphError("designated outer face is not a face of this graph")
            self._outer = Face(key)

    # -- construction helpers -------------------------------------------------

    def _check_simple_symmetric(self):
        for v, ns in self._rot.items():
            if v in ns:
                raise GraphError("loop at vertex %d" % v)
            if len(set(ns)) != len(ns):
                raise GraphError("parallel edges at vertex %d" % v)
            for u in ns:
                if u not in self._rot:
                    raise GraphError("asymmetric rotation: %d lists unknown vertex %d" % (v, u))
                if v not in self._nbr[u]:
                    raise GraphError("asymmetric rotation: edge %d-%d missing reverse entry" % (v, u))

    def _trace_faces(self):
        succ = {}
        for v, ns in self._rot.items():
            deg = len(ns)
            for i, u in enumerate(ns):
                # arriving at v from u, leave toward the next neighbor clockwise
                succ[(u, v)] = (v, ns[(i + 1) % deg])
        faces = []
        seen = set()
        for start in sorted(succ):
            if start in seen:
                continue
            walk = [start]
            seen.add(start)
            cur = succ[start]
            while cur != start:
                walk.append(cur)
                seen.add(cur)
                cur = succ[cur]
            faces.append(Face.from_walk(walk))
        self._faces = sorted(faces, key=lambda f: f.darts)
        self._face_keys = {f.darts for f in self._faces}
        self._dart_face = {}
        for f in self._faces:
            for d in f.darts:
                self._dart_face[d] = f

    def _check_euler(self):
        for comp in self.components():
            vc = len(comp)
            ec = sum(len(self._rot[v]) for v in comp) // 2
            if ec == 0:
                fc = 1
            else:
                fc = sum(1 for f in self._faces if f.darts[0][0] in comp)
            if vc - ec + fc != 2:
                raise GraphError(
                    "Euler violation (V-E+F = %d-%d+%d != 2): rotation is not planar"
                    % (vc, ec, fc))

    # -- basic queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self._rot))

    @property
    def n(self) -> int:
        return len(self._rot)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._rot.values()) // 2

    @property
    def edges(self) -> frozenset:
        return frozenset(frozenset((v, u)) for v, ns in self._rot.items() for u in ns)

    def rotation(self, v) -> tuple:
        return self._rot[v]

    def neighbors(self, v) -> frozenset:
        return self._nbr[v]

    def degree(self, v) -> int:
        return len(self._rot[v])

    def has_vertex(self, v) -> bool:
        return v in self._rot

    def has_edge(self, u, v) -> bool:
        return v in self._nbr.get(u, ())

    def max_vertex_id(self) -> int:
        return max(self._rot, default=0)

    def components(self) -> list:
        seen = set()
        comps = []
        for v in sorted(self._rot):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for u in self._nbr[x]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- faces -----------------------------------------------------------------

    def faces(self) -> list:
        return list(self._faces)

    @property
    def outer_face(self):
        return self._outer

    def face_of_dart(self, dart) -> Face:
        return self._dart_face[dart]

    def find_face(self, walk):
        """Face matching a cyclic vertex walk, or None."""
        darts = tuple((walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))
        key = _canonical_walk(darts)
        return Face(key) if key in self._face_keys else None

    def re_embed(self, f: Face) -> "PlaneGraph":
        if not isinstance(f, Face) or f.darts not in self._face_keys:
            raise GraphError("not a face of this graph: %r" % (f,))
        return PlaneGraph(self._rot, outer_face=f, check=False)

    # -- structure queries -----------------------------------------------------

    def is_triangle_free(self) -> bool:
        for v, ns in self._rot.items():
            for u in ns:
                if u > v and self._nbr[v] & self._nbr[u]:
                    return False
        return True

    def paths_between(self, a, b, length, forbidden=()) -> list:
        """All simple a-b paths with exactly ``length`` edges.

        Internal vertices must avoid ``forbidden``; the endpoints are exempt.
        """
        if a == b:
            raise GraphError("path endpoints must differ")
        if length > 6:
            raise GraphError("path search limited to length 6")
        if a not in self._rot or b not in self._rot:
            return []
        forbidden = frozenset(forbidden)
        out = []

        def walk(path, used):
            v = path[-1]
            rem = length - (len(path) - 1)
            for w in sorted(self._nbr[v]):
                if w == b:
                    if rem == 1:
                        out.append(tuple(path) + (w,))
                    continue
                if rem <= 1 or w in used or w in forbidden:
                    continue
                path.append(w)
                used.add(w)
                walk(path, used)
                used.discard(w)
                path.pop()

        walk([a], {a})
        return out

    def cycles_up_to(self, max_len) -> list:
        """All simple cycles of length <= max_len, once up to rotation/reflection.

        Each cycle is reported as a vertex tuple starting at its smallest
        vertex, oriented so the second vertex is smaller than the last.
        """
        if max_len > 6:
            raise GraphError("cycle search limited to length 6")
        cycles = []

        def extend(path, used):
            v = path[-1]
            for w in sorted(self._nbr[v]):
                if w == path[0]:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                    continue
                if w < path[0] or w in used:
                    continue
                if len(path) < max_len:
                    path.append(w)
                    used.add(w)
                    extend(path, used)
                    used.discard(w)
                    path.pop()

        for v in sorted(self._rot):
            extend([v], {v})
        return cycles

    # -- disk extraction ---------------------------------------------------------

    def disk_subgraph(self, cycle) -> "DiskSubgraph":
        """Subgraph drawn in the closed disk bounded by ``cycle``.

        The disk is the side whose faces do not include the designated outer
        face, found by dual connectivity after cutting the cycle's edges.
        """
        cycle = tuple(cycle)
        if self._outer is None:
            raise GraphError("disk extraction needs a designated outer face")
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            raise GraphError("not a simple cycle: %r" % (cycle,))
        cyc_edges = set()
        for i in range(k):
            u, v = cycle[i], cycle[(i + 1) % k]
            if not self.has_edge(u, v):
                raise GraphError("not a cycle of this graph: missing edge %d-%d" % (u, v))
            cyc_edges.add(frozenset((u, v)))
        if len(cyc_edges) != k:
            raise GraphError("not a simple cycle: %r" % (cycle,))
        if cyc_edges == self._outer.edge_set and k == self._outer.length:
            raise GraphError("cycle bounds the outer face")
        comp = next(c for c in self.components() if cycle[0] in c)
        if self._outer.darts[0][0] not in comp:
            raise GraphError("outer face lies in a different component than the cycle")

        comp_faces = [f for f in self._faces if f.darts[0][0] in comp]
        index = {f.darts: i for i, f in enumerate(comp_faces)}
        parent = list(range(len(comp_faces)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for v, ns in self._rot.items():
            if v not in comp:
                continue
            for u in ns:
                if u > v or frozenset((u, v)) in cyc_edges:
                    continue
                a = index[self._dart_face[(u, v)].darts]
                b = index[self._dart_face[(v, u)].darts]
                parent[find(a)] = find(b)

        outer_class = find(index[self._outer.darts])
        disk_faces = [f for f in comp_faces if find(index[f.darts]) != outer_class]
        if not disk_faces:
            raise InternalInvariantError("cycle does not enclose any face")
        disk_keys = {f.darts for f in disk_faces}

        kept = set(cyc_edges)
        for f in disk_faces:
            kept |= f.edge_set
        verts = sorted({v for e in kept for v in e})
        rot = {v: tuple(u for u in self._rot[v] if frozenset((u, v)) in kept) for v in verts}
        sub = PlaneGraph(rot)
        new_outer = [f for f in sub.faces() if f.darts not in disk_keys]
        if len(new_outer) != 1:
            raise InternalInvariantError("disk extraction produced %d boundary faces" % len(new_outer))
        return DiskSubgraph(cycle, sub.re_embed(new_outer[0]))

    # -- derived graphs ------------------------------------------------------------

    def delete_vertices(self, vs) -> "PlaneGraph":
        vs = set(vs)
        rot = {v: tuple(u for u in ns if u not in vs)
               for v, ns in self._rot.items() if v not in vs}
        return PlaneGraph(rot, check=False)

    def relabel(self, mapping) -> "PlaneGraph":
        rot = {mapping[v]: tuple(mapping[u] for u in ns) for v, ns in self._rot.items()}
        return PlaneGraph(rot, check=False)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self._rot)
        g.add_edges_from((v, u) for v, ns in self._rot.items() for u in ns if u > v)
        return g

    def __repr__(self):
        return "PlaneGraph(n=%d, m=%d)" % (self.n, self.m)


@dataclass(frozen=True)
class DiskSubgraph:
    """A bounding cycle together with the subgraph inside its closed disk."""

    cycle: tuple
    subgraph: PlaneGraph


# -- file format ---------------------------------------------------------------


def parse(text: str) -> PlaneGraph:
    """Read the line-oriented graph format (see ``serialize``)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError("first line must be 'n m'") from None
    rotation = {}
    outer_walk = None
    for line in lines[1:]:
        if ":" not in line:
            raise GraphError("malformed line: %r" % line)
        left, right = line.split(":", 1)
        left = left.strip()
        try:
            entries = tuple(int(t) for t in right.split())
        except ValueError:
            raise GraphError("malformed line: %r" % line) from None
        if left == "outer":
            outer_walk = entries
            continue
        try:
            v = int(left)
        except ValueError:
            raise GraphError("malformed line: %r" % line) from None
        if v in rotation:
            raise GraphError("duplicate rotation line for vertex %d" % v)
        rotation[v] = entries
    if sorted(rotation) != list(range(1, n + 1)):
        raise GraphError("vertices must be exactly 1..n")
    g = PlaneGraph(rotation)
    if g.m != m:
        raise GraphError("edge count mismatch: header says %d, rotations give %d" % (m, g.m))
    if outer_walk is not None:
        f = g.find_face(outer_walk)
        if f is None:
            raise GraphError("outer walk is not a face: %r" % (outer_walk,))
        g = g.re_embed(f)
    return g


def serialize(g: PlaneGraph) -> str:
    """Emit the graph file format.

    Vertices appear in ascending order and each rotation starts from its
    smallest neighbor, so output is bit-exact for equal graphs.
    """
    out = ["%d %d" % (g.n, g.m)]
    for v in g.vertices:
        ns = g.rotation(v)
        if ns:
            i = ns.index(min(ns))
            ns = ns[i:] + ns[:i]
        out.append("%d: %s" % (v, " ".join(str(u) for u in ns)))
    if g.outer_face is not None:
        out.append("outer: %s" % " ".join(str(v) for v in g.outer_face.vertex_walk()))
    return "\n".join(out) + "\n"


# -- isomorphism and embedding helpers -----------------------------------------


def isomorphic_small(g: PlaneGraph, h: PlaneGraph) -> bool:
    """Abstract-graph isomorphism for graphs with at most 12 vertices."""
    if g.n > 12 or h.n > 12:
        raise GraphError("isomorphic_small limited to 12 vertices")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def embed_edges(vertices, edges) -> PlaneGraph:
    """Find some plane embedding of an abstract graph (convenience only)."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise GraphError("graph is not planar")
    data = emb.get_data()
    return PlaneGraph({v: tuple(data.get(v, ())) for v in g.nodes})


def cycle_graph(k, start=1) -> PlaneGraph:
    """The k-cycle on vertices start..start+k-1."""
    vs = list(range(start, start + k))
    rot = {vs[i]: (vs[(i - 1) % k], vs[(i + 1) % k]) for i in range(k)}
    return PlaneGraph(rot)


def path_graph(k, start=1) -> PlaneGraph:
    vs = list(range(start, start + k))
    rot = {}
    for i, v in enumerate(vs):
        ns = []
        if i > 0:
            ns.append(vs[i - 1])
        if i < k - 1:
            ns.append(vs[i + 1])
        rot[v] = tuple(ns)
    return PlaneGraph(rot)
