"""Command line front end.

Exit codes: 0 all certificates consistent, 1 usage error, 2 a certificate whose
hypotheses hold is not a GRR, 3 internal inconsistency between the two routes.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .automorphism import automorphisms, sring_aut_order
from .certify import (
    BatchSummary,
    TripleCertificate,
    batch,
    enumerate_triples,
    negation_pairs,
    verify_triple,
)
from .graphs import build_cayley, read_graph, to_dot
from .groups import make_cyclic, make_dihedral
from .perms import cycles
from .schur import closure, is_trivial

EXIT_OK, EXIT_USAGE, EXIT_FINDING, EXIT_BUG = 0, 1, 2, 3

CSV_FIELDS = [
    "n", "r", "s", "t",
    "odd_gt5", "linear_relation", "diff_gcds",
    "closure_rank", "closure_trivial",
    "cond1", "cond2", "cond3",
    "aut_order", "sring_aut_order", "is_grr", "consistent",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _flat(cert: TripleCertificate) -> dict:
    d = cert.to_dict()
    row = {k: d[k] for k in ("n", "r", "s", "t", "closure_rank", "closure_trivial",
                             "aut_order", "sring_aut_order", "is_grr", "consistent")}
    row.update(d["hypotheses"])
    row.update(d["lemma2"])
    return row


def _text(cert: TripleCertificate) -> str:
    return (
        f"n={cert.n} (r,s,t)=({cert.r},{cert.s},{cert.t}) rank={cert.closure_rank} "
        f"trivial={cert.closure_trivial} aut={cert.aut_order} sring_aut={cert.sring_aut_order} "
        f"grr={cert.is_grr} consistent={cert.consistent}"
    )


class _Writer:
    def __init__(self, fmt: str, out):
        self.fmt, self.out = fmt, out
        self.csv = None
        if fmt == "csv":
            self.csv = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
            self.csv.writeheader()

    def write(self, cert: TripleCertificate) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(cert.to_dict()) + "\n")
        elif self.fmt == "csv":
            self.csv.writerow(_flat(cert))
        else:
            self.out.write(_text(cert) + "\n")
        self.out.flush()


def _exit_code(certs) -> int:
    if any(not c.consistent for c in certs):
        return EXIT_BUG
    if any(c.contradicts_claim for c in certs):
        return EXIT_FINDING
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        triples = enumerate_triples(args.n, canonical=args.canonical)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        full = triples if not args.canonical else None
        print(json.dumps({
            "n": args.n,
            "canonical": args.canonical,
            "orbit_size": args.n if args.canonical else 1,
            "count": len(triples),
            "negation_pairs": negation_pairs(args.n, full) if full is not None else None,
            "triples": [list(T) for T in triples],
        }))
    else:
        for r, s, t in triples:
            print(f"{r} {s} {t}" if args.format == "text" else f"{r},{s},{t}")
        if args.canonical:
            print(f"# {len(triples)} representatives, orbit size {args.n} each", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = verify_triple(args.n, args.r, args.s, args.t)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = sys.stdout
    _Writer(args.format, out).write(cert)
    if args.dot:
        group = make_dihedral(cert.n)
        S = [group.index(f"ab^{k}") for k in (cert.r, cert.s, cert.t)]
        Path(args.dot).write_text(to_dot(build_cayley(group, S), group.labels, f"Cay_D{cert.n}"))
    return _exit_code([cert])


def cmd_closure(args) -> int:
    group = make_cyclic(args.n) if args.cyclic else make_dihedral(args.n)
    try:
        C = [group.index(tok) for tok in args.set.split(",") if tok.strip()]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    p = closure(group, C)
    sys.stdout.write(p.dumps())
    print(f"trivial={is_trivial(p)}")
    if args.aut:
        print(f"sring_aut_order={sring_aut_order(p)}")
    return EXIT_OK


def cmd_aut(args) -> int:
    try:
        g = read_graph(Path(args.graph).read_text())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    pg = automorphisms(g)
    print(f"vertices={g.V} edges={len(g.edges())}")
    print(f"order={pg.order}")
    for gen in pg.generators:
        print(cycles(gen))
    return EXIT_OK


def cmd_batch(args) -> int:
    if args.to < args.from_:
        print("error: empty range", file=sys.stderr)
        return EXIT_USAGE
    ns = [n for n in range(args.from_, args.to + 1) if n % 2 == 1 and n > 5]
    if not ns:
        print("error: range contains no odd n > 5", file=sys.stderr)
        return EXIT_USAGE
    summary = BatchSummary()
    out = open(args.out, "w") if args.out else sys.stdout
    certs = []
    try:
        writer = _Writer(args.format, out)
        for cert in batch(ns, jobs=args.jobs, canonical=args.canonical, summary=summary):
            writer.write(cert)
            certs.append(cert)
    finally:
        if args.out:
            out.close()
    s = summary
    print(json.dumps({
        "summary": {
            "n_values": ns,
            "triples_checked": s.triples_checked,
            "grrs_confirmed": s.grrs_confirmed,
            "inconsistencies": s.inconsistencies,
            "contradictions": s.contradictions,
            "errors": s.errors,
            "empty_n": s.empty_n,
            "per_n": {str(k): v for k, v in s.per_n.items()},
        }
    }), file=sys.stderr)
    return _exit_code(certs)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schurgrr", description="Certify trivalent GRRs of dihedral groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list candidate triples (r, s, t) for D_n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--canonical", action="store_true", help="only r = 0 representatives")
    e.add_argument("--format", choices=["json", "csv", "text"], default="text")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="certify one triple")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--format", choices=["json", "csv", "text"], default="json")
    v.add_argument("--dot", metavar="PATH", help="also write the Cayley graph as DOT")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("closure", help="Schur-ring closure of a set in D_n (or Z_n)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--set", required=True, help='comma separated, e.g. "a,ab,ab^4"')
    c.add_argument("--cyclic", action="store_true", help="work in Z_n with generator g")
    c.add_argument("--aut", action="store_true", help="also print the S-ring automorphism order")
    c.set_defaults(func=cmd_closure)

    a = sub.add_parser("aut", help="automorphism group of a graph6 or edge-list file")
    a.add_argument("--graph", required=True)
    a.set_defaults(func=cmd_aut)

    b = sub.add_parser("batch", help="enumerate and verify every odd n in a range")
    b.add_argument("--from", dest="from_", type=int, required=True)
    b.add_argument("--to", type=int, required=True)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--format", choices=["json", "csv", "text"], default="json")
    b.add_argument("--out", metavar="PATH")
    b.add_argument("--canonical", action="store_true")
    b.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
