"""Oracle-grade verifier for independent sets.

Deliberately dumb and self-contained: the lifting code must never share
logic with the checks that certify its output.
"""
from __future__ import annotations


def violating_edge(graph, vertices):
    """Return an edge inside ``vertices``, or None if the set is independent.

    Also returns a pseudo-edge (v, v) if some v is not a vertex of the graph.
    """
    vs = list(vertices)
    for v in vs:
        if not graph.has_vertex(v):
            return (v, v)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if v in graph.rotation(u):
                return (u, v)
    return None


def is_independent_set(graph, vertices) -> bool:
    return violating_edge(graph, vertices) is None
