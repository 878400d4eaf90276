"""Recursive lower-bound solver and the exact branch-and-bound oracle."""
from __future__ import annotations

from dataclasses import dataclass

from . import configurations, extremal, reductions, verify
from .plane_graph import GraphError, PlaneGraph

ORACLE_LIMIT = 40
EXACT_BASE = 8  # components at most this large are solved exactly


def exact_alpha(g: PlaneGraph):
    """Exact independence number with a witness, by branch and bound.

    Branches on a maximum-degree vertex; vertices of residual degree <= 1 are
    taken greedily, which is always safe.  Deterministic.
    """
    if g.n > ORACLE_LIMIT:
        raise GraphError("oracle limited to %d vertices" % ORACLE_LIMIT)
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in g.neighbors(v):
            adj[index[v]] |= 1 << index[u]
    best_size = -1
    best_mask = 0

    def go(avail: int, chosen: int, size: int):
        nonlocal best_size, best_mask
        while avail:
            if size + avail.bit_count() <= best_size:
                return
            pick = -1
            pick_deg = -1
            m = avail
            while m:
                b = m & -m
                i = b.bit_length() - 1
                m ^= b
                d = (adj[i] & avail).bit_count()
                if d <= 1:
                    # residual degree <= 1: taking i is never worse
                    avail &= ~(adj[i] | b)
                    chosen |= b
                    size += 1
                    pick = -2
                    break
                if d > pick_deg:
                    pick_deg = d
                    pick = i
            if pick == -2:
                continue
            b = 1 << pick
            go(avail & ~(adj[pick] | b), chosen | b, size + 1)
            avail &= ~b
        if size > best_size:
            best_size = size
            best_mask = chosen

    go((1 << len(verts)) - 1, 0, 0)
    witness = frozenset(v for v in verts if best_mask >> index[v] & 1)
    return best_size, witness


@dataclass(frozen=True)
class SolveResult:
    independent_set: frozenset
    trace: tuple
    guarantee: int
    met: bool

    @property
    def size(self) -> int:
        return len(self.independent_set)


def _solve_component(g: PlaneGraph):
    """(independent set, trace) for one connected plane triangle-free graph."""
    if g.n <= EXACT_BASE:
        _, witness = exact_alpha(g)
        return witness, ()
    c = configurations.find_any(g)
    if c.kind == "C5":
        c = configurations.c5_to_c2(g, c)
    reduced, step = reductions.reduce(g, c)
    sub_set, sub_trace = _solve_set(reduced)
    lifted = reductions.lift(step, sub_set)
    return lifted, (step,) + sub_trace


def _solve_set(g: PlaneGraph):
    total = set()
    trace = ()
    for comp in g.components():
        rot = {v: g.rotation(v) for v in comp}
        sub_set, sub_trace = _solve_component(PlaneGraph(rot, check=False))
        total |= sub_set
        trace += sub_trace
    return frozenset(total), trace


def _component_guarantee(g: PlaneGraph) -> int:
    if extremal.is_member(g).is_member:
        return (g.n + 3) // 3   # ceil((n+1)/3)
    return (g.n + 4) // 3       # ceil((n+2)/3)


def solve(g: PlaneGraph) -> SolveResult:
    """Find a large independent set constructively and check the claimed bound."""
    if not g.is_triangle_free():
        raise GraphError("solver requires a triangle-free input")
    s, trace = _solve_set(g)
    if not verify.is_independent_set(g, s):
        raise reductions.InternalInvariantError("solver output failed verification")
    guarantee = 0
    for comp in g.components():
        rot = {v: g.rotation(v) for v in comp}
        guarantee += _component_guarantee(PlaneGraph(rot, check=False))
    return SolveResult(s, trace, guarantee, len(s) >= guarantee)


@dataclass(frozen=True)
class BoundReport:
    n: int
    alpha: int
    witness: frozenset
    member: bool
    lower_bound_ok: bool       # alpha >= (n+1)/3
    main_ok: bool              # alpha >= (n+2)/3 unless member

    @property
    def ok(self) -> bool:
        return self.lower_bound_ok and self.main_ok


def check_theorem_bounds(g: PlaneGraph) -> BoundReport:
    if not g.is_triangle_free():
        raise GraphError("bounds apply to triangle-free graphs only")
    alpha, witness = exact_alpha(g)
    member = extremal.is_member(g).is_member
    lower_ok = 3 * alpha >= g.n + 1
    main_ok = member or 3 * alpha >= g.n + 2
    return BoundReport(g.n, alpha, witness, member, lower_ok, main_ok)
