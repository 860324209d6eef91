"""Brute-force reference computations. Deliberately slow and independent of the
engine code paths they check."""

from itertools import permutations


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def convolve(group, X, Y):
    out = {}
    for x in X:
        for y in Y:
            z = group.mul[x][y]
            out[z] = out.get(z, 0) + 1
    return out


def is_schur_partition(group, classes):
    class_sets = [frozenset(B) for B in classes]
    all_sets = set(class_sets)
    if frozenset([group.identity]) not in all_sets:
        return False
    for B in class_sets:
        if frozenset(group.inv[x] for x in B) not in all_sets:
            return False
    for X in class_sets:
        for Y in class_sets:
            prod = convolve(group, X, Y)
            for B in class_sets:
                if len({prod.get(x, 0) for x in B}) != 1:
                    return False
    return True


def all_schur_partitions(group):
    """Every Schur ring over ``group``, as a list of class lists."""
    e = group.identity
    others = [x for x in group.elements() if x != e]
    return [[[e]] + part for part in set_partitions(others) if is_schur_partition(group, [[e]] + part)]


def coarsest_containing(group, schur_partitions, C):
    """The unique coarsest Schur partition in which ``C`` is a union of classes.
    Asserts that it is refined by every other admissible one."""
    C = set(C)
    ok = [P for P in schur_partitions if all(set(B) <= C or not (set(B) & C) for B in P)]
    best = min(ok, key=len)
    block = {}
    for i, B in enumerate(best):
        for x in B:
            block[x] = i
    for P in ok:
        for B in P:
            assert len({block[x] for x in B}) == 1, "admissible partitions have no coarsest element"
    return sorted(sorted(B) for B in best)


def count_automorphisms(V, edges, colors=None):
    """Number of vertex permutations preserving the edge set (and colors)."""
    E = {frozenset(e) for e in edges}
    count = 0
    for p in permutations(range(V)):
        if colors is not None and any(colors[p[v]] != colors[v] for v in range(V)):
            continue
        if all(frozenset((p[u], p[v])) in E for u, v in E):
            count += 1
    return count


def count_arc_automorphisms(arc):
    V = len(arc)
    return sum(
        1
        for p in permutations(range(V))
        if all(arc[p[u]][p[v]] == arc[u][v] for u in range(V) for v in range(V))
    )
