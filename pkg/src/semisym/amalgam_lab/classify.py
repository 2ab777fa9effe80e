"""Decide which of the fifteen Goldschmidt types an amalgam has.

Decision table (``flag_i`` means ``[O_2(G_i), O^2(G_i)] != 1``):

=========  =====================================================================
``|G12|``  rule
=========  =====================================================================
1          G1
2          both members non-abelian -> G1^1; one abelian (Z6) -> G1^2
4          some flag set -> G2 (Alt(4) first); no flag -> G1^3
8          both flags -> G3; else G12 elementary abelian -> G2^3; else the
           unflagged member contains an element of order 12 (Dih(24)) -> G2^1,
           otherwise G2^2
16         both flags -> G3^1; else G2^4
32         G4
64         eta(G_2, O_2(G_2)) = 1 -> G4^1, = 2 -> G5, where G_2 is the member
           whose O_2(G_i) has the smaller Omega_1(Z(.))
128        G5^1
=========  =====================================================================

Member orders are then checked against the table so that an input that
slips through the rules is reported instead of mislabelled.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..perm_core import (
    StructureDescriptor,
    center,
    commutator_subgroup,
    eta_count,
    o_upper_p,
    omega1,
    p_core,
    structure_probe,
)
from .amalgam import Amalgam

MEMBER_ORDERS = {
    "G1": 3, "G1^1": 6, "G1^2": 6, "G1^3": 12,
    "G2": 12, "G2^1": 24, "G2^2": 24, "G2^3": 24, "G2^4": 48,
    "G3": 24, "G3^1": 48,
    "G4": 96, "G4^1": 192,
    "G5": 192, "G5^1": 384,
}


class ClassificationError(RuntimeError):
    """No row of the type table matches a verified amalgam."""


@dataclass
class AmalgamTypeEvidence:
    orders: tuple[int, int, int]
    commutator_flags: tuple[bool, bool]
    etas: tuple[int, int]
    o2_descriptors: tuple[StructureDescriptor, StructureDescriptor]
    g12_descriptor: StructureDescriptor
    omega_center_orders: tuple[int, int]
    orientation: tuple[int, int] = (1, 2)


def _member_facts(g):
    o2 = p_core(g, 2)
    up = o_upper_p(g, 2)
    flag = commutator_subgroup(o2, up).order > 1
    eta = eta_count(g, o2).eta
    om = omega1(center(o2)).order if o2.order > 1 else 1
    return o2, flag, eta, om


def evidence(a: Amalgam) -> AmalgamTypeEvidence:
    facts = [_member_facts(g) for g in (a.g1, a.g2)]
    return AmalgamTypeEvidence(
        orders=(a.g1.order, a.g2.order, a.g12.order),
        commutator_flags=(facts[0][1], facts[1][1]),
        etas=(facts[0][2], facts[1][2]),
        o2_descriptors=(structure_probe(facts[0][0]), structure_probe(facts[1][0])),
        g12_descriptor=structure_probe(a.g12),
        omega_center_orders=(facts[0][3], facts[1][3]),
    )


def _has_order(g, n: int) -> bool:
    return any(x.order() == n for x in g.elements())


def classify_type(a: Amalgam) -> tuple[str, AmalgamTypeEvidence]:
    """Type label plus the evidence used; ``evidence.orientation`` lists which
    input member plays the table's G1 and which its G2."""
    ev = evidence(a)
    n = a.g12.order
    f1, f2 = ev.commutator_flags
    members = (a.g1, a.g2)
    flagged_first = (1, 2) if f1 or not f2 else (2, 1)
    orient = (1, 2)
    if n == 1:
        label = "G1"
    elif n == 2:
        ab = (a.g1.is_abelian(), a.g2.is_abelian())
        if not any(ab):
            label = "G1^1"
        elif ab[0] != ab[1]:
            label = "G1^2"
            orient = (2, 1) if ab[0] else (1, 2)
        else:
            raise ClassificationError("both members abelian over |G12| = 2")
    elif n == 4:
        if f1 or f2:
            label, orient = "G2", flagged_first
        else:
            label = "G1^3"
    elif n == 8:
        if f1 and f2:
            label = "G3"
        else:
            orient = flagged_first
            other = members[orient[1] - 1]
            if ev.g12_descriptor.elementary_abelian:
                label = "G2^3"
            elif _has_order(other, 12):
                label = "G2^1"
            else:
                label = "G2^2"
    elif n == 16:
        if f1 and f2:
            label = "G3^1"
        else:
            label, orient = "G2^4", flagged_first
    elif n == 32:
        label = "G4"
        orient = _orient_by_center(ev)
    elif n == 64:
        orient = _orient_by_center(ev)
        eta2 = ev.etas[orient[1] - 1]
        if eta2 == 1:
            label = "G4^1"
        elif eta2 == 2:
            label = "G5"
        else:
            raise ClassificationError(f"eta(G2, O2(G2)) = {eta2} over |G12| = 64")
    elif n == 128:
        label = "G5^1"
        orient = _orient_by_center(ev)
    else:
        raise ClassificationError(f"|G12| = {n} matches no type")
    expected = MEMBER_ORDERS[label]
    if a.g1.order != expected or a.g2.order != expected:
        raise ClassificationError(f"member orders {a.g1.order}, {a.g2.order} do not fit {label}")
    ev.orientation = orient
    return label, ev


def _orient_by_center(ev: AmalgamTypeEvidence) -> tuple[int, int]:
    """The table's G2 is the member whose O_2 has the smaller Omega_1 of its centre."""
    z1, z2 = ev.omega_center_orders
    return (2, 1) if z1 < z2 else (1, 2)


def oriented(a: Amalgam, label: str, ev: AmalgamTypeEvidence) -> Amalgam:
    """The amalgam with members ordered as in the type table."""
    b = a if ev.orientation == (1, 2) else a.swapped()
    return replace(b, type_label=label)
