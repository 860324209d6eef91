"""Schur rings over a finite group, represented by their basic-set partitions.

The closure of a set ``C`` is computed as a refinement fixpoint. Starting from
the partition cut out by ``{1}``, ``C`` and ``C^-1``, the partition is split

* by the coefficient fibers of every product of two class sums, and
* against its own elementwise inverse,

until neither step changes anything. Each split only separates elements that
every Schur ring containing ``C`` must separate already, and a partition that
survives both steps satisfies the Schur ring axioms, so the fixpoint is the
coarsest Schur ring in which ``C`` is a union of basic sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

from .groups import FiniteGroup, GroupRingElement, make_cyclic


class NotASchurRing(ValueError):
    pass


def _canonical(class_of: Sequence[int]) -> tuple[int, ...]:
    """Relabel class ids by ascending minimum element."""
    relabel: dict[int, int] = {}
    out = []
    for c in class_of:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class SchurPartition:
    """A partition of a group's elements, read as candidate Schur ring basis.

    ``class_of[x]`` is the class id of element ``x``; ids are assigned in order
    of each class's smallest element, so two equal partitions always compare
    and print identically.
    """

    group: FiniteGroup
    class_of: tuple
    closed: bool = field(default=False, compare=False)

    @classmethod
    def from_classes(cls, group: FiniteGroup, classes: Iterable[Iterable[int]]) -> "SchurPartition":
        class_of = [-1] * group.order
        for i, B in enumerate(classes):
            for x in B:
                if class_of[x] != -1:
                    raise ValueError(f"element {x} appears in two classes")
                class_of[x] = i
        if -1 in class_of:
            raise ValueError("classes do not cover the group")
        return cls(group, _canonical(class_of))

    @classmethod
    def discrete(cls, group: FiniteGroup) -> "SchurPartition":
        return cls(group, tuple(range(group.order)))

    @classmethod
    def coarsest(cls, group: FiniteGroup) -> "SchurPartition":
        rest = [x for x in group.elements() if x != group.identity]
        return cls.from_classes(group, [[group.identity], rest] if rest else [[group.identity]])

    @property
    def rank(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @property
    def classes(self) -> list[frozenset]:
        out: list[list[int]] = [[] for _ in range(self.rank)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return [frozenset(B) for B in out]

    def has_class(self, B: Iterable[int]) -> bool:
        return frozenset(B) in set(self.classes)

    def is_union_of_classes(self, C: Iterable[int]) -> bool:
        C = set(C)
        return all(B <= C or not (B & C) for B in self.classes)

    def refines(self, other: "SchurPartition") -> bool:
        """True if every class of ``self`` lies inside a class of ``other``."""
        seen: dict[int, int] = {}
        for a, b in zip(self.class_of, other.class_of):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def class_sum(self, i: int) -> GroupRingElement:
        return GroupRingElement(self.group, [1 if c == i else 0 for c in self.class_of])

    def dumps(self) -> str:
        """``rank=r`` followed by one ``id: labels`` line per class."""
        lines = [f"rank={self.rank}"]
        for i, B in enumerate(self.classes):
            lines.append(f"{i}: " + " ".join(self.group.label(x) for x in sorted(B)))
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, group: FiniteGroup, text: str) -> "SchurPartition":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("rank="):
            raise ValueError("missing rank line")
        rank = int(lines[0][5:])
        classes = []
        for ln in lines[1:]:
            _, _, body = ln.partition(":")
            classes.append([group.index(tok) for tok in body.split()])
        if len(classes) != rank:
            raise ValueError(f"rank={rank} but {len(classes)} classes listed")
        return cls.from_classes(group, classes)


def sw_split(x: GroupRingElement) -> list[tuple[int, frozenset]]:
    """Group the support of ``x`` by coefficient value, ascending by value."""
    fibers: dict[int, set[int]] = {}
    for g, c in enumerate(x.coeff):
        if c:
            fibers.setdefault(c, set()).add(g)
    return [(c, frozenset(fibers[c])) for c in sorted(fibers)]


def _refine(class_of: Sequence[int], key: Sequence) -> tuple[int, ...]:
    return _canonical([(c, k) for c, k in zip(class_of, key)])


def _product_counts(group: FiniteGroup, X: Sequence[int], Y: Sequence[int]) -> list[int]:
    out = [0] * group.order
    mul = group.mul
    for g in X:
        row = mul[g]
        for h in Y:
            out[row[h]] += 1
    return out


def _initial(group: FiniteGroup, C: Iterable[int]) -> tuple[int, ...]:
    C = set(C)
    Cinv = {group.inv[x] for x in C}
    e = group.identity
    key = [(x == e, x in C, x in Cinv) for x in group.elements()]
    # identity sits alone regardless of membership in C
    key = [(True, False, False) if x == e else k for x, k in enumerate(key)]
    return _canonical(key)


def _inverse_split(group: FiniteGroup, class_of: Sequence[int]) -> tuple[int, ...]:
    return _refine(class_of, [class_of[group.inv[x]] for x in group.elements()])


def _classes(class_of: Sequence[int]) -> list[tuple[int, ...]]:
    out: list[list[int]] = [[] for _ in range(max(class_of) + 1)]
    for x, c in enumerate(class_of):
        out[c].append(x)
    return [tuple(B) for B in out]


def closure(group: FiniteGroup, C: Iterable[int]) -> SchurPartition:
    """Basic sets of the smallest Schur ring whose module contains ``sum(C)``.

    Worklist form: a pair of classes is multiplied once; pairs are only revisited
    when one of the two classes has since been split.
    """
    C = list(C)
    if any(not 0 <= x < group.order for x in C):
        raise IndexError("element out of range")
    class_of = _initial(group, C)
    done: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    while True:
        split = _inverse_split(group, class_of)
        if split != class_of:
            class_of = split
            continue
        classes = _classes(class_of)
        changed = False
        for X in classes:
            for Y in classes:
                if (X, Y) in done:
                    continue
                done.add((X, Y))
                split = _refine(class_of, _product_counts(group, X, Y))
                if split != class_of:
                    class_of = split
                    changed = True
                    break
            if changed:
                break
        if not changed:
            return SchurPartition(group, class_of, closed=True)


def closure_rescan(group: FiniteGroup, C: Iterable[int]) -> SchurPartition:
    """Same fixpoint as :func:`closure`, recomputing every product each round."""
    class_of = _initial(group, list(C))
    while True:
        before = class_of
        class_of = _inverse_split(group, class_of)
        classes = _classes(class_of)
        for X in classes:
            for Y in classes:
                class_of = _refine(class_of, _product_counts(group, X, Y))
        if class_of == before:
            return SchurPartition(group, class_of, closed=True)


def is_trivial(p: SchurPartition) -> bool:
    return p.rank == p.group.order


@dataclass
class AxiomReport:
    ok: bool
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def check_schur_axioms(p: SchurPartition) -> AxiomReport:
    """Check that ``p`` is the basic-set partition of a Schur ring."""
    g = p.group
    problems = []
    if len(p.class_of) != g.order:
        return AxiomReport(False, ["partition does not cover the group"])
    classes = p.classes
    class_set = set(classes)
    if frozenset([g.identity]) not in class_set:
        problems.append("identity is not a singleton class")
    for i, B in enumerate(classes):
        Binv = frozenset(g.inv[x] for x in B)
        if Binv not in class_set:
            problems.append(f"inverse of class {i} is not a class")
    if not problems:
        ordered = [tuple(sorted(B)) for B in classes]
        for i, X in enumerate(ordered):
            for j, Y in enumerate(ordered):
                prod = _product_counts(g, X, Y)
                for k, B in enumerate(ordered):
                    if len({prod[x] for x in B}) > 1:
                        problems.append(f"B{i}*B{j} is not constant on class {k}")
                        break
    return AxiomReport(not problems, problems)


@dataclass
class StructureTensor:
    rank: int
    beta: list  # beta[i][j][k]

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.beta[i][j][k]


def structure_constants(p: SchurPartition) -> StructureTensor:
    """Integers ``beta[i][j][k]`` with ``B_i * B_j = sum_k beta[i][j][k] B_k``."""
    g = p.group
    classes = [tuple(sorted(B)) for B in p.classes]
    r = len(classes)
    beta = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i, X in enumerate(classes):
        for j, Y in enumerate(classes):
            prod = _product_counts(g, X, Y)
            for k, B in enumerate(classes):
                vals = {prod[x] for x in B}
                if len(vals) != 1:
                    raise NotASchurRing(f"B{i}*B{j} is not constant on class {k}")
                beta[i][j][k] = vals.pop()
    return StructureTensor(r, beta)


def lemma1_property(n: int, r: int, t: int) -> bool:
    """In ``Z_n`` (n odd), if ``{g^r, g^t}`` is a basic set of its own closure
    then so is ``{g^s, g^-s}`` for every ``s`` coprime to ``n``.

    Returns True vacuously when ``{g^r, g^t}`` is not a basic set.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    if gcd(r - t, n) != 1:
        raise ValueError("r - t must be coprime to n")
    group = make_cyclic(n)
    pair = {r % n, t % n}
    p = closure(group, pair)
    if not p.has_class(pair):
        return True
    classes = set(p.classes)
    return all(
        frozenset({s % n, (-s) % n}) in classes for s in range(1, n) if gcd(s, n) == 1
    )


@dataclass
class Lemma2Report:
    cond1_not_basic: bool
    cond2_diffs_coprime: bool
    cond3_no_midpoint: bool
    details: dict

    @property
    def all_hold(self) -> bool:
        return self.cond1_not_basic and self.cond2_diffs_coprime and self.cond3_no_midpoint


def lemma2_report(n: int, r: int, s: int, t: int, cond1: bool) -> Lemma2Report:
    """Evaluate the arithmetic triviality conditions for ``{ab^r, ab^s, ab^t}``.

    ``cond1`` (the three reflections do not form a basic set) needs a closure
    computation and is passed in by the caller.
    """
    gcds = {
        "r-s": gcd(abs(r - s), n),
        "s-t": gcd(abs(s - t), n),
        "r-t": gcd(abs(r - t), n),
    }
    midpoints = {
        "r+s=2t": (r + s - 2 * t) % n == 0,
        "r+t=2s": (r + t - 2 * s) % n == 0,
        "s+t=2r": (s + t - 2 * r) % n == 0,
    }
    return Lemma2Report(
        cond1_not_basic=bool(cond1),
        cond2_diffs_coprime=all(v == 1 for v in gcds.values()),
        cond3_no_midpoint=not any(midpoints.values()),
        details={"gcds": gcds, "midpoints": midpoints},
    )
