"""Finite groups as explicit multiplication tables, and the integer group ring.

Elements are plain ints ``0..m-1``. Dihedral elements ``a^e b^k`` live at index
``e*n + k``; cyclic elements ``g^k`` at index ``k``. In both cases the identity
is index 0.

The dihedral product is fixed as::

    (e1, k1) * (e2, k2) = (e1 ^ e2, k1 + k2)   if e2 == 0
                        = (e1 ^ e2, k2 - k1)   if e2 == 1

so that ``(ab^r)(ab^t) = b^(t-r)``. Everything downstream relies on this one rule.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GroupMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table.

    ``mul[x][y]`` is the index of ``x*y`` and ``inv[x]`` the index of ``x^-1``.
    Instances are immutable; equality is identity of the table contents.
    """

    mul: tuple
    inv: tuple
    identity: int = 0
    labels: Optional[tuple] = None
    name: str = ""
    # dihedral/cyclic parameter, 0 for groups loaded from a table
    n: int = field(default=0)
    kind: str = field(default="table")

    @property
    def order(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(len(self.mul))

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def index(self, label: str) -> int:
        """Inverse of :meth:`label`. Dihedral and cyclic groups also accept
        unreduced exponents such as ``ab^-1`` or ``g^12``."""
        if self.kind == "dihedral":
            e, k = parse_dihedral_label(label)
            return dihedral_index(self.n, e, k)
        if self.kind == "cyclic":
            return parse_cyclic_label(label) % self.n
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        return int(label)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def check(self, exhaustive_limit: int = 64, samples: int = 20000, seed: int = 0) -> None:
        """Raise ``ValueError`` if the table is not a group.

        Associativity is checked exhaustively up to ``exhaustive_limit``
        elements and by random sampling above that.
        """
        m, e, mul, inv = self.order, self.identity, self.mul, self.inv
        for x in range(m):
            if mul[e][x] != x or mul[x][e] != x:
                raise ValueError(f"identity law fails at {x}")
            if mul[x][inv[x]] != e or mul[inv[x]][x] != e:
                raise ValueError(f"inverse law fails at {x}")
        if m <= exhaustive_limit:
            triples = ((x, y, z) for x in range(m) for y in range(m) for z in range(m))
        else:
            import random

            rng = random.Random(seed)
            triples = (
                (rng.randrange(m), rng.randrange(m), rng.randrange(m)) for _ in range(samples)
            )
        for x, y, z in triples:
            if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                raise ValueError(f"associativity fails at {(x, y, z)}")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.mul == other.mul and self.identity == other.identity

    def __hash__(self):
        return hash((self.order, self.identity, self.mul[1] if self.order > 1 else ()))

    def __repr__(self):
        return f"FiniteGroup({self.name or 'table'}, order={self.order})"


def dihedral_index(n: int, e: int, k: int) -> int:
    return (e % 2) * n + k % n


def dihedral_pair(n: int, x: int) -> tuple[int, int]:
    return divmod(x, n)


def dihedral_label(n: int, x: int) -> str:
    e, k = divmod(x, n)
    if k == 0:
        return "a" if e else "1"
    rot = "b" if k == 1 else f"b^{k}"
    return ("a" if e else "") + rot


_DIHEDRAL_RE = re.compile(r"^(a)?(?:b(?:\^(-?\d+))?)?$")


def parse_dihedral_label(label: str) -> tuple[int, int]:
    """``"ab^3"`` -> ``(1, 3)``. Whitespace is ignored; ``1`` and ``e`` are the identity."""
    s = "".join(label.split())
    if s in ("1", "e"):
        return 0, 0
    m = _DIHEDRAL_RE.match(s)
    if not s or m is None:
        raise ValueError(f"bad dihedral element {label!r}")
    e = 1 if m.group(1) else 0
    if "b" not in s:
        k = 0
    else:
        k = int(m.group(2)) if m.group(2) is not None else 1
    return e, k


def parse_cyclic_label(label: str) -> int:
    s = "".join(label.split())
    if s in ("1", "e"):
        return 0
    m = re.match(r"^g(?:\^(-?\d+))?$", s)
    if m is None:
        raise ValueError(f"bad cyclic element {label!r}")
    return int(m.group(1)) if m.group(1) is not None else 1


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` generated by ``a`` (order 2) and ``b`` (order n)."""
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n
    mul = []
    for x in range(m):
        e1, k1 = divmod(x, n)
        row = []
        for y in range(m):
            e2, k2 = divmod(y, n)
            k = k1 + k2 if e2 == 0 else k2 - k1
            row.append((e1 ^ e2) * n + k % n)
        mul.append(tuple(row))
    inv = tuple(x if x >= n else (-x) % n for x in range(m))
    labels = tuple(dihedral_label(n, x) for x in range(m))
    return FiniteGroup(tuple(mul), inv, 0, labels, f"D{n}", n, "dihedral")


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group ``Z_n`` with generator ``g`` at index 1."""
    if n < 1:
        raise ValueError("n must be positive")
    mul = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    inv = tuple((-x) % n for x in range(n))
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    return FiniteGroup(mul, inv, 0, labels, f"Z{n}", n, "cyclic")


def group_from_table(rows: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Build a group from a multiplication table whose identity is index 0."""
    m = len(rows)
    mul = tuple(tuple(int(v) for v in row) for row in rows)
    if any(len(row) != m for row in mul):
        raise ValueError("table is not square")
    if any(not 0 <= v < m for row in mul for v in row):
        raise ValueError("table entry out of range")
    inv = []
    for x in range(m):
        ys = [y for y in range(m) if mul[x][y] == 0]
        if len(ys) != 1:
            raise ValueError(f"element {x} has no unique inverse")
        inv.append(ys[0])
    g = FiniteGroup(mul, tuple(inv), 0, None, name)
    g.check()
    return g


def read_table(text: str, name: str = "") -> FiniteGroup:
    """Parse the plain-text table format: ``m`` then ``m`` rows of ``m`` indices."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty table")
    m = int(tokens[0])
    vals = [int(t) for t in tokens[1:]]
    if len(vals) != m * m:
        raise ValueError(f"expected {m * m} entries, got {len(vals)}")
    return group_from_table([vals[i * m:(i + 1) * m] for i in range(m)], name)


def write_table(group: FiniteGroup) -> str:
    if group.identity != 0:
        raise ValueError("table format requires the identity at index 0")
    lines = [str(group.order)]
    lines += [" ".join(map(str, row)) for row in group.mul]
    return "\n".join(lines) + "\n"


class GroupRingElement:
    """An element of Z[G]: one integer coefficient per group element.

    Supports ``+``, ``-``, ``*`` (convolution, or scaling by an int) and ``**``.
    Coefficients are Python ints, so powers never overflow.
    """

    __slots__ = ("group", "coeff")

    def __init__(self, group: FiniteGroup, coeff: Iterable[int]):
        coeff = tuple(int(c) for c in coeff)
        if len(coeff) != group.order:
            raise ValueError("coefficient vector has wrong length")
        self.group = group
        self.coeff = coeff

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, [0] * group.order)

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls.basis(group, group.identity)

    @classmethod
    def basis(cls, group: FiniteGroup, x: int, c: int = 1) -> "GroupRingElement":
        coeff = [0] * group.order
        coeff[x] = c
        return cls(group, coeff)

    def support(self) -> set[int]:
        return {x for x, c in enumerate(self.coeff) if c}

    def _same_group(self, other: "GroupRingElement") -> None:
        if self.group is not other.group and self.group != other.group:
            raise GroupMismatch("group ring elements over different groups")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._same_group(other)
        return GroupRingElement(self.group, [a + b for a, b in zip(self.coeff, other.coeff)])

    def __neg__(self):
        return GroupRingElement(self.group, [-a for a in self.coeff])

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, [a * other for a in self.coeff])
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._same_group(other)
        mul = self.group.mul
        out = [0] * self.group.order
        rhs = [(h, c) for h, c in enumerate(other.coeff) if c]
        for g, a in enumerate(self.coeff):
            if not a:
                continue
            row = mul[g]
            for h, c in rhs:
                out[row[h]] += a * c
        return GroupRingElement(self.group, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = GroupRingElement.one(self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self.coeff == other.coeff

    def __hash__(self):
        return hash(self.coeff)

    def __repr__(self):
        terms = []
        for x, c in enumerate(self.coeff):
            if c:
                lab = self.group.label(x)
                terms.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(terms) if terms else "0"


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def gr_pow(x: GroupRingElement, e: int) -> GroupRingElement:
    return x ** e


def simple_quantity(group: FiniteGroup, B: Iterable[int]) -> GroupRingElement:
    """The formal sum of the elements of ``B``."""
    coeff = [0] * group.order
    for x in B:
        if not 0 <= x < group.order:
            raise IndexError(f"element {x} out of range")
        coeff[x] = 1
    return GroupRingElement(group, coeff)
