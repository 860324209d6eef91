"""Simple undirected graphs, Cayley graphs, and graph6 / edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .groups import FiniteGroup


class InvalidConnectingSet(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..V-1`` with sorted adjacency lists."""

    adj: tuple
    colors: Optional[tuple] = None

    @classmethod
    def from_edges(cls, V: int, edges: Iterable[tuple[int, int]], colors=None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(V)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < V and 0 <= v < V):
                raise ValueError(f"edge {(u, v)} out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs), tuple(colors) if colors is not None else None)

    @property
    def V(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.V) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_automorphism(self, perm) -> bool:
        if self.colors is not None and any(self.colors[perm[v]] != self.colors[v] for v in range(self.V)):
            return False
        edge_set = {(u, v) for u in range(self.V) for v in self.adj[u]}
        return all((perm[u], perm[v]) in edge_set for u, v in edge_set)


def generated_subgroup(group: FiniteGroup, S: Iterable[int]) -> set[int]:
    """Elements reachable from the identity by right multiplication by ``S``."""
    S = list(S)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for u in frontier:
            for s in S:
                w = group.mul[u][s]
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def validate_connecting_set(group: FiniteGroup, S: Iterable[int]) -> tuple[bool, list[str]]:
    S = set(S)
    problems = []
    if group.identity in S:
        problems.append("connecting set contains the identity")
    missing = sorted(x for x in S if group.inv[x] not in S)
    if missing:
        problems.append("not inverse-closed: " + ", ".join(group.label(x) for x in missing))
    reached = generated_subgroup(group, S)
    if len(reached) != group.order:
        problems.append(f"generates a subgroup of order {len(reached)}, not {group.order}")
    return not problems, problems


def build_cayley(group: FiniteGroup, S: Iterable[int]) -> Graph:
    """``Cay(G, S)``: ``u`` is adjacent to ``u*s`` for every ``s`` in ``S``."""
    S = sorted(set(S))
    ok, problems = validate_connecting_set(group, S)
    if not ok:
        raise InvalidConnectingSet("; ".join(problems))
    mul = group.mul
    return Graph(tuple(tuple(sorted(mul[u][s] for s in S)) for u in group.elements()))


# graph6: https://users.cecs.anu.edu.au/~bdm/data/formats.txt


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if data[1] != 126:
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        return n, data[4:]
    n = 0
    for c in data[2:8]:
        n = (n << 6) | (c - 63)
    return n, data[8:]


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    n = g.V
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    )
    out = (b">>graph6<<" if header else b"") + _encode_n(n) + body
    return out.decode("ascii")


def from_graph6(s: str) -> Graph:
    data = s.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise ValueError("invalid graph6 character")
    n, rest = _decode_n(data)
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = rest[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.V} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty edge list")
    V, E = int(rows[0][0]), int(rows[0][1])
    edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    if len(edges) != E:
        raise ValueError(f"header says {E} edges, found {len(edges)}")
    g = Graph.from_edges(V, edges)
    if len(g.edges()) != E:
        raise ValueError("duplicate edges in edge list")
    return g


def read_graph(text: str) -> Graph:
    """Accept either graph6 or the ``V E`` edge-list format."""
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if len(first.split()) == 1 and not first.isdigit():
        return from_graph6(first)
    return from_edge_list(text)


def to_dot(g: Graph, labels=None, name: str = "G") -> str:
    lab = labels or [str(v) for v in range(g.V)]
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{lab[v]}"];' for v in range(g.V)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
