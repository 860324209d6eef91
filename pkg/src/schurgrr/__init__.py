"""Schur-ring closure and automorphism certification of trivalent GRRs of dihedral groups."""

from .automorphism import (
    PermGroup,
    automorphism_group,
    automorphisms,
    is_grr,
    left_translations,
    sring_aut_order,
)
from .certify import TripleCertificate, batch, enumerate_triples, verify_triple
from .graphs import Graph, InvalidConnectingSet, build_cayley, validate_connecting_set
from .groups import (
    FiniteGroup,
    GroupRingElement,
    gr_add,
    gr_mul,
    gr_pow,
    make_cyclic,
    make_dihedral,
    simple_quantity,
)
from .perms import group_order
from .schur import (
    NotASchurRing,
    SchurPartition,
    check_schur_axioms,
    closure,
    is_trivial,
    lemma1_property,
    lemma2_report,
    structure_constants,
    sw_split,
)

__version__ = "0.1.0"
