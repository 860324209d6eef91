"""Candidate trivalent reflection sets ``{ab^r, ab^s, ab^t}`` of ``D_n`` with
``3r + s = 4t (mod n)``, and their two-route verification."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Iterable, Iterator, Optional

from .automorphism import automorphisms, sring_aut_order
from .graphs import build_cayley, validate_connecting_set, InvalidConnectingSet
from .groups import dihedral_index, make_dihedral
from .schur import closure, is_trivial, lemma2_report


class DegenerateConnectingSet(ValueError):
    pass


def _check_n(n: int) -> None:
    if n <= 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and greater than 5, got {n}")


def triple_ok(n: int, r: int, s: int, t: int) -> bool:
    return (
        (3 * r + s - 4 * t) % n == 0
        and gcd(r - s, n) == 1
        and gcd(s - t, n) == 1
        and gcd(r - t, n) == 1
    )


def enumerate_triples(n: int, canonical: bool = False) -> list[tuple[int, int, int]]:
    """All ``(r, s, t)`` in ``[0, n)`` with ``s = 4t - 3r`` and pairwise
    differences coprime to ``n``, sorted.

    Shifting all three exponents by the same amount (conjugation by a rotation)
    preserves the conditions, so with ``canonical=True`` only ``r == 0`` is kept;
    each such triple stands for an orbit of ``n`` triples.
    """
    _check_n(n)
    out = []
    for r in range(1 if canonical else n):
        for t in range(n):
            s = (4 * t - 3 * r) % n
            if triple_ok(n, r, s, t):
                out.append((r, s, t))
    return sorted(out)


def expand_canonical(n: int, triples: Iterable[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    return sorted({((r + d) % n, (s + d) % n, (t + d) % n) for r, s, t in triples for d in range(n)})


def negation_pairs(n: int, triples: Iterable[tuple[int, int, int]]) -> int:
    """Number of unordered ``{T, -T}`` pairs among ``triples``."""
    ts = set(triples)
    pairs = {frozenset([T, tuple((-x) % n for x in T)]) for T in ts if tuple((-x) % n for x in T) in ts}
    return len(pairs)


@dataclass
class TripleCertificate:
    n: int
    r: int
    s: int
    t: int
    hypotheses: dict
    closure_rank: int
    closure_trivial: bool
    lemma2: dict
    aut_order: int
    sring_aut_order: int
    is_grr: bool
    consistent: bool

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def contradicts_claim(self) -> bool:
        """All hypotheses hold but the graph is not a GRR."""
        return self.hypotheses_hold and not self.is_grr

    def to_dict(self) -> dict:
        return asdict(self)


def verify_triple(n: int, r: int, s: int, t: int) -> TripleCertificate:
    """Certify ``Cay(D_n, {ab^r, ab^s, ab^t})`` along both routes:
    Schur-ring closure and direct automorphism search."""
    if n < 1:
        raise ValueError("n must be positive")
    r, s, t = r % n, s % n, t % n
    if len({r, s, t}) < 3:
        raise DegenerateConnectingSet(f"exponents {(r, s, t)} are not distinct mod {n}")
    group = make_dihedral(n)
    S = [dihedral_index(n, 1, k) for k in (r, s, t)]
    ok, problems = validate_connecting_set(group, S)
    if not ok:
        raise InvalidConnectingSet("; ".join(problems))

    hypotheses = {
        "odd_gt5": n % 2 == 1 and n > 5,
        "linear_relation": (3 * r + s - 4 * t) % n == 0,
        "diff_gcds": all(gcd(d, n) == 1 for d in (r - s, s - t, r - t)),
    }
    p = closure(group, S)
    trivial = is_trivial(p)
    report = lemma2_report(n, r, s, t, cond1=not p.has_class(S))
    aut = automorphisms(build_cayley(group, S)).order
    saut = sring_aut_order(p)
    consistent = aut == saut and (not trivial or aut == 2 * n)
    return TripleCertificate(
        n=n,
        r=r,
        s=s,
        t=t,
        hypotheses=hypotheses,
        closure_rank=p.rank,
        closure_trivial=trivial,
        lemma2={
            "cond1": report.cond1_not_basic,
            "cond2": report.cond2_diffs_coprime,
            "cond3": report.cond3_no_midpoint,
        },
        aut_order=aut,
        sring_aut_order=saut,
        is_grr=aut == 2 * n,
        consistent=consistent,
    )


@dataclass
class BatchSummary:
    triples_checked: int = 0
    grrs_confirmed: int = 0
    inconsistencies: int = 0
    contradictions: int = 0
    errors: list = field(default_factory=list)
    empty_n: list = field(default_factory=list)
    per_n: dict = field(default_factory=dict)


def _verify(args):
    try:
        return verify_triple(*args)
    except ValueError as exc:
        return exc


def batch(
    n_values: Iterable[int],
    jobs: int = 1,
    canonical: bool = False,
    summary: Optional[BatchSummary] = None,
) -> Iterator[TripleCertificate]:
    """Verify every enumerated triple for each ``n``, yielding certificates in
    ``(n, r, s, t)`` order. Counts accumulate into ``summary``."""
    summary = summary if summary is not None else BatchSummary()
    work = []
    for n in sorted(set(n_values)):
        triples = enumerate_triples(n, canonical=canonical)
        summary.per_n[n] = {"triples": len(triples), "negation_pairs": negation_pairs(n, triples)}
        if not triples:
            summary.empty_n.append(n)
        work.extend((n, r, s, t) for r, s, t in triples)

    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_verify, work, chunksize=max(1, len(work) // (4 * jobs)))
            yield from _tally(work, results, summary)
    else:
        yield from _tally(work, map(_verify, work), summary)


def _tally(work, results, summary):
    for args, res in zip(work, results):
        if isinstance(res, Exception):
            summary.errors.append({"triple": list(args), "error": str(res)})
            continue
        summary.triples_checked += 1
        summary.grrs_confirmed += res.is_grr
        summary.inconsistencies += not res.consistent
        summary.contradictions += res.contradicts_claim
        yield res
