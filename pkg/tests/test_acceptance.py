"""Exit criteria A1-A9. All comparisons are exact integer/set equalities.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
lists one PASS/FAIL line per criterion.
"""

import random
import time
from functools import lru_cache
from itertools import product

import networkx as nx
import pytest

from schurgrr.automorphism import automorphisms, sring_aut_order
from schurgrr.certify import enumerate_triples, verify_triple
from schurgrr.graphs import Graph, build_cayley, validate_connecting_set
from schurgrr.groups import (
    GroupRingElement,
    group_from_table,
    make_cyclic,
    make_dihedral,
    simple_quantity,
)
from schurgrr.schur import SchurPartition, closure, lemma1_property

from oracles import all_schur_partitions, coarsest_containing, count_automorphisms


@lru_cache(maxsize=None)
def certificates(n):
    start = time.perf_counter()
    certs = [verify_triple(n, r, s, t) for r, s, t in enumerate_triples(n)]
    return certs, time.perf_counter() - start


# A1

@pytest.mark.parametrize("n", [11, 13])
def test_A1_theorem_at_desk_scale(n):
    certs, elapsed = certificates(n)
    assert certs, f"no triples for n={n}"
    assert elapsed < 60, f"n={n} took {elapsed:.1f}s"
    bad = [(c.r, c.s, c.t, c.closure_rank, c.aut_order) for c in certs
           if not (c.closure_trivial and c.aut_order == 2 * n)]
    assert not bad, f"{len(bad)}/{len(certs)} triples fail, e.g. (r,s,t,rank,aut)={bad[0]}"


# A2

@pytest.mark.parametrize("n", [11, 13])
def test_A2_dual_path_on_certificates(n):
    certs, _ = certificates(n)
    assert all(c.sring_aut_order == c.aut_order for c in certs)


def _random_connecting_sets(G, count, seed):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        C = {x for x in G.elements() if rng.random() < rng.choice([0.2, 0.35, 0.5])}
        S = (C | {G.inv[x] for x in C}) - {G.identity}
        if validate_connecting_set(G, S)[0]:
            found.append(sorted(S))
    return found


@pytest.mark.parametrize(
    "G", [make_dihedral(5), make_dihedral(7), make_cyclic(7), make_cyclic(9)], ids=lambda G: G.name
)
def test_A2_dual_path_random(G):
    for S in _random_connecting_sets(G, 50, seed=G.order):
        graph_order = automorphisms(build_cayley(G, S)).order
        assert sring_aut_order(closure(G, S)) == graph_order, S


# A3

@pytest.mark.parametrize("n", [9, 15])
def test_A3_divisible_by_three_is_empty(n):
    for r, t in product(range(n), repeat=2):
        s = (4 * t - 3 * r) % n
        assert (s - t) % n == (3 * (t - r)) % n
    assert enumerate_triples(n) == []


# A4

def test_A4_n7_probe():
    cert = verify_triple(7, 0, 4, 1)
    assert cert.consistent
    assert cert.lemma2["cond3"] is False
    assert cert.aut_order == cert.sring_aut_order


# A5

def test_A5_lemma1_suite():
    from math import gcd

    start = time.perf_counter()
    checked = 0
    for n in (5, 7, 9, 15):
        for r, t in product(range(n), repeat=2):
            if gcd(r - t, n) == 1:
                assert lemma1_property(n, r, t), (n, r, t)
                checked += 1
    assert checked > 0
    assert time.perf_counter() - start < 10


# A6

def _rot(D, n, exps):
    return sum((GroupRingElement.basis(D, e % n) for e in exps), GroupRingElement.zero(D))


@pytest.mark.parametrize("n", [11, 13, 17, 19])
def test_A6_reflection_square_identity(n):
    D = make_dihedral(n)
    triples = enumerate_triples(n)
    assert triples
    for r, s, t in triples:
        d = r - t
        lhs = simple_quantity(D, [n + r, n + s, n + t]) ** 2
        rhs = GroupRingElement.one(D) * 3 + _rot(D, n, [d, -d, 3 * d, -3 * d, 4 * d, -4 * d])
        assert lhs == rhs, (r, s, t)


def test_A6_b6_square_identity():
    n = 19
    D = make_dihedral(n)
    for r, s, t in enumerate_triples(n):
        d = r - t
        B6 = _rot(D, n, [d, -d, 3 * d, -3 * d, 4 * d, -4 * d])
        rhs = (
            GroupRingElement.one(D) * 6
            + B6 * 2
            + _rot(D, n, [6 * d, -6 * d, 8 * d, -8 * d])
            + _rot(D, n, [5 * d, -5 * d, 7 * d, -7 * d]) * 2
            + _rot(D, n, [2 * d, -2 * d]) * 3
        )
        assert B6 ** 2 == rhs, (r, s, t)


# A7

def _corpus():
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() <= 6]
    rng = random.Random(2024)
    for _ in range(20):
        g = nx.gnp_random_graph(8, rng.choice([0.3, 0.5, 0.7]), seed=rng.randrange(10**9))
        graphs.append(g)
    return graphs


def test_A7_automorphism_oracle():
    corpus = _corpus()
    assert sum(1 for g in corpus if g.number_of_nodes() == 6) == 156
    for g in corpus:
        V = g.number_of_nodes()
        ours = automorphisms(Graph.from_edges(V, g.edges())).order
        assert ours == count_automorphisms(V, list(g.edges())), nx.to_graph6_bytes(g)


# A8

def test_A8_classical_anchors():
    K6 = Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i)])
    assert automorphisms(K6).order == 720
    assert automorphisms(build_cayley(make_cyclic(5), [1, 4])).order == 10
    assert sring_aut_order(SchurPartition.coarsest(make_dihedral(3))) == 720
    for n in (3, 5, 7):
        assert sring_aut_order(SchurPartition.discrete(make_dihedral(n))) == 2 * n


# A9

def _quaternion():
    # elements 1, i, j, k, -1, -i, -j, -k
    unit = {(1, 1): 4, (1, 2): 3, (1, 3): 2 + 4,
            (2, 1): 3 + 4, (2, 2): 4, (2, 3): 1,
            (3, 1): 2, (3, 2): 1 + 4, (3, 3): 4}
    rows = []
    for x in range(8):
        row = []
        for y in range(8):
            a, b = x % 4, y % 4
            if a == 0 or b == 0:
                base = a + b
            else:
                base = unit[(a, b)]
            sign = (x // 4 + y // 4 + base // 4) % 2
            row.append(base % 4 + 4 * sign)
        rows.append(row)
    return group_from_table(rows, "Q8")


def _product_table(m1, m2, name):
    rows = [[((a1 + b1) % m1) * m2 + (a2 + b2) % m2
             for b1 in range(m1) for b2 in range(m2)]
            for a1 in range(m1) for a2 in range(m2)]
    return group_from_table(rows, name)


def _small_groups():
    groups = [make_cyclic(n) for n in range(1, 11)]
    groups += [make_dihedral(n) for n in range(1, 6)]
    groups.append(_quaternion())
    groups.append(_product_table(2, 4, "Z2xZ4"))
    groups.append(group_from_table([[a ^ b for b in range(8)] for a in range(8)], "Z2^3"))
    return groups


@pytest.mark.parametrize("G", _small_groups(), ids=lambda G: G.name)
def test_A9_closure_oracle(G):
    schur = all_schur_partitions(G)
    m = G.order
    for mask in range(1 << m):
        C = [x for x in range(m) if mask >> x & 1]
        ours = sorted(sorted(B) for B in closure(G, C).classes)
        assert ours == coarsest_containing(G, schur, C), C


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
