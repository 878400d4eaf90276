"""Corpus generation: exhaustive small graphs, random instances, golden files."""
from __future__ import annotations

import functools
import itertools
import json
import random
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx

from . import extremal, solver
from .plane_graph import GraphError, PlaneGraph, embed_edges, parse

GOLDEN_DIR = Path(__file__).resolve().parent.parent.parent / "corpus" / "golden"

ENUM_LIMIT = 11


@dataclass(frozen=True)
class CorpusSpec:
    mode: str                  # exhaustive | random | extremal
    n_max: int = 9
    seed: int = 0
    count: int = 10
    steps: int = 3


def _iso_dedup_add(buckets, g: nx.Graph) -> bool:
    """Add to hash-bucketed store unless an isomorphic copy is present."""
    key = (g.number_of_nodes(), g.number_of_edges(),
           nx.weisfeiler_lehman_graph_hash(g))
    for h in buckets.setdefault(key, []):
        if nx.is_isomorphic(g, h):
            return False
    buckets[key].append(g)
    return True


@functools.lru_cache(maxsize=None)
def _enumerate_abstract(n_max: int):
    """Connected triangle-free planar graphs up to isomorphism, as nx graphs.

    Grown one vertex at a time: every connected graph arises by attaching a
    new vertex (nonempty neighborhood) to a connected graph one size down.
    """
    g1 = nx.Graph()
    g1.add_node(0)
    levels = [[g1]]
    for n in range(2, n_max + 1):
        buckets = {}
        grown = []
        for g in levels[-1]:
            nodes = list(g.nodes)
            for r in range(1, n):
                for subset in itertools.combinations(nodes, r):
                    # triangle-freeness: the new closed neighborhood must be independent
                    if any(g.has_edge(a, b) for a, b in itertools.combinations(subset, 2)):
                        continue
                    h = g.copy()
                    h.add_node(n - 1)
                    h.add_edges_from((n - 1, v) for v in subset)
                    if not nx.check_planarity(h, counterexample=False)[0]:
                        continue
                    if _iso_dedup_add(buckets, h):
                        grown.append(h)
        levels.append(grown)
    return levels


def enumerate_small(n_max: int):
    """All connected plane triangle-free graphs with <= n_max vertices, embedded."""
    if n_max > ENUM_LIMIT:
        raise GraphError("exhaustive enumeration limited to %d vertices" % ENUM_LIMIT)
    out = []
    for level in _enumerate_abstract(n_max):
        for g in level:
            relabeled = {v: i + 1 for i, v in enumerate(sorted(g.nodes))}
            out.append(embed_edges(sorted(relabeled.values()),
                                   [(relabeled[a], relabeled[b]) for a, b in g.edges]))
    return out


def _subdivide(g: PlaneGraph, edge, fresh: int) -> PlaneGraph:
    u, v = edge
    rot = {x: g.rotation(x) for x in g.vertices}
    rot[u] = tuple(fresh if y == v else y for y in rot[u])
    rot[v] = tuple(fresh if y == u else y for y in rot[v])
    rot[fresh] = (u, v)
    return PlaneGraph(rot)


def _add_in_face(g: PlaneGraph, face, picks, fresh: int) -> PlaneGraph:
    """Insert a new vertex inside a face, joined to chosen boundary occurrences.

    ``picks`` are indices into the face walk; the picked vertices must be
    distinct and pairwise non-adjacent so no triangle can appear.
    """
    walk = face.vertex_walk()
    base = {x: list(g.rotation(x)) for x in g.vertices}
    for i in picks:
        u = walk[i]
        prev = face.darts[(i - 1) % face.length][0]
        at = base[u].index(prev)
        base[u].insert(at + 1, fresh)
    chosen = [walk[i] for i in picks]
    for order in (tuple(chosen), tuple(reversed(chosen))):
        rot = {x: tuple(ns) for x, ns in base.items()}
        rot[fresh] = order
        try:
            return PlaneGraph(rot)
        except GraphError:
            continue
    raise GraphError("face insertion broke the embedding")


def gen_random(spec: CorpusSpec):
    """Seeded girth-preserving growth from C4; deterministic per seed."""
    rng = random.Random(spec.seed)
    out = []
    for _ in range(spec.count):
        g = embed_edges([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)])
        while g.n < spec.n_max:
            fresh = g.max_vertex_id() + 1
            if rng.random() < 0.45:
                edge = sorted(tuple(sorted(e)) for e in g.edges)[rng.randrange(g.m)]
                g = _subdivide(g, edge, fresh)
                continue
            faces = g.faces()
            face = faces[rng.randrange(len(faces))]
            walk = face.vertex_walk()
            idxs = list(range(face.length))
            rng.shuffle(idxs)
            picks = []
            for i in idxs:
                u = walk[i]
                if any(u == walk[j] or g.has_edge(u, walk[j]) for j in picks):
                    continue
                picks.append(i)
                if len(picks) == 3:
                    break
            if not picks:
                continue
            g = _add_in_face(g, face, sorted(picks), fresh)
        if not g.is_triangle_free():
            raise GraphError("random generator produced a triangle")
        out.append(g)
    return out


def generate_extremal(spec: CorpusSpec):
    return [extremal.generate_member(spec.steps, spec.seed + i)
            for i in range(spec.count)]


# -- golden corpus ---------------------------------------------------------------


def golden_names():
    return sorted(p.stem for p in GOLDEN_DIR.glob("*.graph"))


def load_golden(name: str) -> PlaneGraph:
    return parse((GOLDEN_DIR / (name + ".graph")).read_text())


def golden_expectations() -> dict:
    return json.loads((GOLDEN_DIR / "expectations.json").read_text())


def golden_graphs():
    return {name: load_golden(name) for name in golden_names()}


# -- suite -------------------------------------------------------------------------


@dataclass
class SuiteRow:
    name: str
    n: int
    alpha: int | None
    member: bool
    solve_size: int
    guarantee: int
    met: bool
    lower_ok: bool | None
    main_ok: bool | None


@dataclass
class SuiteReport:
    rows: list = field(default_factory=list)

    @property
    def violations(self):
        return [r for r in self.rows
                if not r.met or r.lower_ok is False or r.main_ok is False]

    def summary(self) -> dict:
        return {
            "graphs": len(self.rows),
            "members": sum(1 for r in self.rows if r.member),
            "tight": sum(1 for r in self.rows
                         if r.alpha is not None and 3 * r.alpha <= r.n + 1),
            "met": sum(1 for r in self.rows if r.met),
            "violations": len(self.violations),
        }


def _spec_graphs(spec: CorpusSpec):
    if spec.mode == "exhaustive":
        return [("n%d_%d" % (g.n, i), g) for i, g in enumerate(enumerate_small(spec.n_max))]
    if spec.mode == "random":
        return [("rnd%d" % i, g) for i, g in enumerate(gen_random(spec))]
    if spec.mode == "extremal":
        return [("ext%d" % i, g) for i, g in enumerate(generate_extremal(spec))]
    raise GraphError("unknown corpus mode %r" % spec.mode)


def run_suite(spec: CorpusSpec) -> SuiteReport:
    report = SuiteReport()
    for name, g in _spec_graphs(spec):
        res = solver.solve(g)
        member = extremal.is_member(g).is_member
        if g.n <= solver.ORACLE_LIMIT:
            bounds = solver.check_theorem_bounds(g)
            alpha, lower_ok, main_ok = bounds.alpha, bounds.lower_bound_ok, bounds.main_ok
        else:
            alpha = lower_ok = main_ok = None
        report.rows.append(SuiteRow(name, g.n, alpha, member, res.size,
                                    res.guarantee, res.met, lower_ok, main_ok))
    report.rows.sort(key=lambda r: (r.n, r.name))
    return report
