"""Automorphism groups by individualization-refinement.

The engine works on arc-colored structures: a ``V x V`` matrix of integer arc
colors plus optional vertex colors. A simple graph is the structure with
``arc[u][v] = 1`` on edges and ``0`` elsewhere; a Schur ring over a group is
the structure with ``arc[u][v]`` = class of ``u^-1 v``.

Search outline. Refine the vertex-color partition to an equitable one, then
repeatedly individualize the first vertex of the smallest non-singleton cell;
this gives the first path and its leaf. Walking that path bottom-up, every
vertex ``w`` in a target cell that is not yet in the orbit of the path vertex
is tried: the subtree below ``w`` is searched for a leaf whose induced map from
the first leaf is an automorphism. Refinement traces are compared level by level
so mismatched subtrees are cut off early. Generators found this way generate the
full automorphism group.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from .graphs import Graph, InvalidConnectingSet, build_cayley, validate_connecting_set
from .groups import FiniteGroup
from .perms import group_order, orbit
from .schur import NotASchurRing, SchurPartition, check_schur_axioms


@dataclass
class PermGroup:
    generators: list
    order: int
    base: list
    orbit_sizes: list


def _refine(arc, cols, cells):
    """Equitable refinement. Returns the refined ordered partition and a trace
    that is invariant under isomorphism."""
    V = len(arc)
    cells = [list(c) for c in cells]
    trace = []
    while True:
        cell_of = [0] * V
        for ci, c in enumerate(cells):
            for v in c:
                cell_of[v] = ci
        out = []
        split = False
        for ci, c in enumerate(cells):
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict = {}
            for v in c:
                sig = tuple(sorted(Counter(zip(cell_of, arc[v], cols[v])).items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            keys = sorted(groups)
            trace.append((ci, tuple((k, len(groups[k])) for k in keys)))
            out.extend(groups[k] for k in keys)
        cells = out
        if not split:
            trace.append(tuple(len(c) for c in cells))
            return cells, tuple(trace)


def _individualize(cells, ci, v):
    rest = [x for x in cells[ci] if x != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _target(cells) -> Optional[int]:
    best = None
    for ci, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = ci
    return best


def _preserves(arc, vcolors, p) -> bool:
    V = len(arc)
    if vcolors is not None and any(vcolors[p[v]] != vcolors[v] for v in range(V)):
        return False
    for u in range(V):
        row, prow = arc[u], arc[p[u]]
        for v in range(V):
            if prow[p[v]] != row[v]:
                return False
    return True


def automorphism_group(arc: Sequence[Sequence[int]], vertex_colors=None) -> PermGroup:
    """Automorphisms of an arc-colored structure, respecting vertex colors."""
    arc = [tuple(row) for row in arc]
    V = len(arc)
    if V == 0:
        return PermGroup([], 1, [], [])
    cols = [tuple(arc[u][v] for u in range(V)) for v in range(V)]
    if vertex_colors is None:
        init = [list(range(V))]
    else:
        by_color: dict = {}
        for v in range(V):
            by_color.setdefault(vertex_colors[v], []).append(v)
        init = [by_color[c] for c in sorted(by_color)]

    node, tr = _refine(arc, cols, init)
    path, traces, targets, base = [node], [tr], [], []
    while (ci := _target(node)) is not None:
        v = node[ci][0]
        targets.append(ci)
        base.append(v)
        node, tr = _refine(arc, cols, _individualize(node, ci, v))
        path.append(node)
        traces.append(tr)
    first_leaf = [c[0] for c in node]

    def explore(cells, depth):
        if depth == len(targets):
            p = [0] * V
            for a, c in zip(first_leaf, cells):
                p[a] = c[0]
            return tuple(p) if _preserves(arc, vertex_colors, p) else None
        ci = targets[depth]
        for x in cells[ci]:
            child, ctr = _refine(arc, cols, _individualize(cells, ci, x))
            if ctr != traces[depth + 1]:
                continue
            p = explore(child, depth + 1)
            if p is not None:
                return p
        return None

    gens: list = []
    orbit_sizes = []
    for level in reversed(range(len(base))):
        v, ci = base[level], targets[level]
        orb = set(orbit(v, gens))
        for w in path[level][ci]:
            if w in orb:
                continue
            child, ctr = _refine(arc, cols, _individualize(path[level], ci, w))
            if ctr != traces[level + 1]:
                continue
            p = explore(child, level + 1)
            if p is not None:
                gens.append(p)
                orb = set(orbit(v, gens))
        orbit_sizes.append(len(orb))
    orbit_sizes.reverse()

    order = group_order(gens, V)
    if order != prod(orbit_sizes):
        raise RuntimeError(f"stabilizer chain order {order} != orbit product {prod(orbit_sizes)}")
    return PermGroup(gens, order, base, orbit_sizes)


def graph_arcs(g: Graph) -> list[list[int]]:
    arc = [[0] * g.V for _ in range(g.V)]
    for u in range(g.V):
        for v in g.adj[u]:
            arc[u][v] = 1
    return arc


def automorphisms(g: Graph) -> PermGroup:
    return automorphism_group(graph_arcs(g), g.colors)


def left_translations(group: FiniteGroup) -> list[tuple[int, ...]]:
    """The maps ``u -> g*u``, one per group element ``g``."""
    return [tuple(group.mul[g][u] for u in group.elements()) for g in group.elements()]


def is_grr(group: FiniteGroup, S) -> bool:
    """True when ``Cay(group, S)`` has exactly ``|group|`` automorphisms."""
    return automorphisms(build_cayley(group, S)).order == group.order


def sring_arcs(p: SchurPartition) -> list[list[int]]:
    g = p.group
    mul, inv, cls = g.mul, g.inv, p.class_of
    return [[cls[mul[inv[u]][v]] for v in g.elements()] for u in g.elements()]


def sring_automorphisms(p: SchurPartition) -> PermGroup:
    report = check_schur_axioms(p)
    if not report:
        raise NotASchurRing("; ".join(report.problems))
    return automorphism_group(sring_arcs(p))


def sring_aut_order(p: SchurPartition) -> int:
    """Order of the group preserving every basic Cayley graph of ``p``."""
    return sring_automorphisms(p).order


__all__ = [
    "PermGroup",
    "InvalidConnectingSet",
    "automorphism_group",
    "automorphisms",
    "graph_arcs",
    "is_grr",
    "left_translations",
    "sring_aut_order",
    "sring_automorphisms",
    "validate_connecting_set",
]
