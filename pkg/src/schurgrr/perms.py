"""Permutations as image tuples, and group orders via a Schreier-Sims chain.

``p[i]`` is the image of ``i``. ``compose(p, q)`` applies ``q`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(p))


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")


def orbit(point: int, gens: Sequence[Sequence[int]]) -> list[int]:
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def cycles(p: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    # orbit point -> coset representative u with u[point] == orbit point
    trans: dict = field(default_factory=dict)


def _build_levels(base, strong, n):
    levels = []
    for i, b in enumerate(base):
        gens = [s for s in strong if all(s[x] == x for x in base[:i])]
        lvl = _Level(b, gens, {b: identity_perm(n)})
        queue = [b]
        for x in queue:
            ux = lvl.trans[x]
            for s in gens:
                y = s[x]
                if y not in lvl.trans:
                    lvl.trans[y] = compose(s, ux)
                    queue.append(y)
        levels.append(lvl)
    return levels


def _sift(g, levels, start):
    for i in range(start, len(levels)):
        lvl = levels[i]
        b = g[lvl.point]
        u = lvl.trans.get(b)
        if u is None:
            return g, i
        g = compose(inverse(u), g)
    return g, len(levels)


def stabilizer_chain(gens: Sequence[Sequence[int]], n: int | None = None):
    """Return ``(base, levels)`` of a base and strong generating set for ``<gens>``."""
    gens = [tuple(g) for g in gens]
    if n is None:
        n = len(gens[0]) if gens else 0
    if any(len(g) != n for g in gens):
        raise ValueError("generators have different degrees")
    strong = [g for g in gens if not is_identity(g)]
    base: list[int] = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(n) if g[i] != i))
    while True:
        levels = _build_levels(base, strong, n)
        new = None
        for i, lvl in enumerate(levels):
            for x, ux in lvl.trans.items():
                for s in lvl.gens:
                    y = s[x]
                    schreier = compose(inverse(lvl.trans[y]), compose(s, ux))
                    h, _ = _sift(schreier, levels, i + 1)
                    if not is_identity(h):
                        new = h
                        break
                if new is not None:
                    break
            if new is not None:
                break
        if new is None:
            return base, levels
        strong.append(new)
        if all(new[b] == b for b in base):
            base.append(next(i for i in range(n) if new[i] != i))


def group_order(gens: Sequence[Sequence[int]], n: int | None = None) -> int:
    """Exact order of the group generated by ``gens``."""
    _, levels = stabilizer_chain(gens, n)
    return prod(len(lvl.trans) for lvl in levels)


def contains(gens: Sequence[Sequence[int]], g: Sequence[int]) -> bool:
    _, levels = stabilizer_chain(gens, len(g))
    h, _ = _sift(tuple(g), levels, 0)
    return is_identity(h)


def enumerate_group(gens: Sequence[Sequence[int]], n: int, limit: int = 10**6) -> set:
    """All elements of ``<gens>`` by breadth-first closure. For checking only."""
    e = identity_perm(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise OverflowError("group larger than limit")
        frontier = nxt
    return seen
