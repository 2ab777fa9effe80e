"""Amalgams (G1, G2, G12) realised inside a common completion."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..perm_core import (
    GeneratedGroup,
    Subgroup,
    core_in,
    eta_count,
    intersect,
    join,
    make_subgroup,
    o_upper_p,
    p_core,
)
from ..perm_core.structure import p_part_of

TYPE_LABELS = (
    "G1", "G1^1", "G1^2", "G1^3",
    "G2", "G2^1", "G2^2", "G2^3", "G2^4",
    "G3", "G3^1",
    "G4", "G4^1",
    "G5", "G5^1",
)


def type_class(label: str) -> str:
    """The class of a type: ``G2^3 -> G2``."""
    return label.split("^")[0]


@dataclass
class Amalgam:
    parent: GeneratedGroup
    g1: Subgroup
    g2: Subgroup
    g12: Subgroup
    type_label: str | None = None
    name: str | None = None

    @classmethod
    def from_generators(cls, parent: GeneratedGroup, g1_gens, g2_gens, type_label: str | None = None,
                        name: str | None = None) -> Amalgam:
        g1 = make_subgroup(parent, g1_gens, name="G1")
        g2 = make_subgroup(parent, g2_gens, name="G2")
        return cls.from_members(parent, g1, g2, type_label, name)

    @classmethod
    def from_members(cls, parent: GeneratedGroup, g1: GeneratedGroup, g2: GeneratedGroup,
                     type_label: str | None = None, name: str | None = None) -> Amalgam:
        g1 = g1 if getattr(g1, "parent", None) is parent else make_subgroup(parent, g1.generators, known_order=g1.order)
        g2 = g2 if getattr(g2, "parent", None) is parent else make_subgroup(parent, g2.generators, known_order=g2.order)
        g12 = intersect(g1, g2)
        g12 = make_subgroup(parent, g12.generators, name="G12", known_order=g12.order)
        return cls(parent, g1, g2, g12, type_label, name)

    def swapped(self) -> Amalgam:
        return Amalgam(self.parent, self.g2, self.g1, self.g12, self.type_label, self.name)

    def member(self, i: int) -> Subgroup:
        return self.g1 if i == 1 else self.g2

    @cached_property
    def generated(self) -> Subgroup:
        """<G1, G2> inside the parent."""
        return join(self.parent, self.g1, self.g2)

    def is_completion(self) -> bool:
        return self.generated.order == self.parent.order


@dataclass
class VerificationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]


def verify_goldschmidt(a: Amalgam) -> VerificationReport:
    """Index, core, order and chief-factor checks; failures become report entries."""
    rep = VerificationReport()
    shared = all(getattr(h, "parent", None) is a.parent for h in (a.g1, a.g2, a.g12))
    rep.checks["shared_parent"] = shared
    inter = intersect(a.g1, a.g2)
    rep.checks["g12_is_intersection"] = inter.order == a.g12.order and a.g12.is_subgroup_of(inter)
    i1, i2 = a.g1.order // a.g12.order, a.g2.order // a.g12.order
    rep.details["indices"] = (i1, i2)
    rep.checks["index_3"] = i1 == 3 and i2 == 3
    core = core_in(a.g12, [a.g1, a.g2])
    rep.details["core_order"] = core.order
    rep.checks["core_trivial"] = core.order == 1
    rep.checks["g12_divides_2^7"] = 128 % a.g12.order == 0
    etas = []
    for g in (a.g1, a.g2):
        etas.append(eta_count(g).eta if rep.checks["g12_divides_2^7"] else None)
    rep.details["eta"] = tuple(etas)
    rep.checks["eta_at_most_2"] = all(e is not None and e <= 2 for e in etas)
    return rep


def is_sylow_completion(a: Amalgam) -> bool:
    """|G12| equals the 2-part of |G|; cross-checked against [G:G1] being odd."""
    by_order = a.g12.order == p_part_of(a.parent.order, 2)
    by_index = (a.parent.order // a.g1.order) % 2 == 1
    if by_order != by_index:
        raise RuntimeError("Sylow-completion tests disagree")
    return by_order


def subamalgam(a: Amalgam) -> Amalgam:
    """(M1, M2, M12) with M_i = O^2(G_i) O_2(O^2(G_{3-i})) and M12 = M1 ∩ M2.

    The result lives in its own completion <M1, M2>, keeps the orientation of
    the input, and is labelled with the plain type of the input's class.
    """
    o2_upper = [o_upper_p(a.g1, 2), o_upper_p(a.g2, 2)]
    lower = [p_core(h, 2) for h in o2_upper]
    gen = join(a.parent, o2_upper[0], o2_upper[1], lower[0], lower[1])
    completion = GeneratedGroup(a.parent.degree, gen.generators, name=f"<M1,M2> in {a.parent.name}",
                                rng_seed=a.parent.rng_seed)
    m1 = join(completion, o2_upper[0], lower[1])
    m2 = join(completion, o2_upper[1], lower[0])
    m12 = join(completion, lower[0], lower[1])
    label = type_class(a.type_label) if a.type_label else None
    sub = Amalgam(completion, m1, m2, make_subgroup(completion, m12.generators, name="M12", known_order=m12.order),
                  label, f"sub({a.name})" if a.name else None)
    check = intersect(m1, m2)
    if check.order != m12.order:
        raise RuntimeError("M1 ∩ M2 differs from O2(O^2(G1)) O2(O^2(G2))")
    return sub
