"""Structural facts about the G5^1 amalgam, recomputed inside Aut(M12).

Notation follows the usual set-up for this amalgam: Q_i = O_2(G_i),
Z_i = Omega_1(Z(Q_i)), V_2 = <Z_1^{G_2}>, U_1 = <V_2^{G_1}>,
W_1 = [U_1, O^2(G_1)], and (G1*, G2*, G12*) is the G5 subamalgam.
Small subgroup searches run on explicit element sets, since every group
involved has at most 384 elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..amalgam_lab import Amalgam, subamalgam
from ..amalgam_lab.catalog import catalog_amalgam
from ..amalgam_lab.search import _index_two_subgroups
from ..perm_core import (
    GeneratedGroup,
    Permutation,
    center,
    centralizer,
    commutator_subgroup,
    is_normal,
    make_subgroup,
    normal_closure,
    o_upper_p,
    omega1,
    p_core,
    structure_probe,
)


@dataclass
class FactCheck:
    key: str
    claim: str
    computed: object
    expected: object
    passed: bool


@dataclass
class FactReport:
    checks: list[FactCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, key: str, claim: str, computed, expected, passed: bool | None = None) -> None:
        ok = computed == expected if passed is None else passed
        self.checks.append(FactCheck(key, claim, computed, expected, bool(ok)))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"key": c.key, "claim": c.claim, "computed": _plain(c.computed), "expected": _plain(c.expected),
                 "passed": c.passed}
                for c in self.checks
            ],
        }


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


# -- small element-set helpers ----------------------------------------------
def _closure(gens, degree: int) -> frozenset:
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [g.images if isinstance(g, Permutation) else g for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def _is_4x4(h: GeneratedGroup) -> bool:
    d = structure_probe(h)
    return d.abelian and d.order == 16 and d.exponent == 4 and d.involutions == 3


def _subgroups_of_order(g: GeneratedGroup, size: int, max_gens: int = 3) -> list[frozenset]:
    """All subgroups of a small group with ``size`` elements and at most ``max_gens`` generators."""
    elems = sorted(x.images for x in g.elements())
    found: set[frozenset] = set()
    for r in range(1, max_gens + 1):
        for combo in itertools.combinations(elems, r):
            s = _closure(combo, g.degree)
            if len(s) == size:
                found.add(s)
    return sorted(found, key=lambda s: sorted(s))


def _elementary_abelian_of_order(g: GeneratedGroup, size: int) -> list[frozenset]:
    """Elementary abelian 2-subgroups of ``g`` with ``size`` elements, grown one involution at a time."""
    invs = [x for x in g.elements() if x.order() == 2]
    layer = {frozenset([tuple(range(g.degree)), x.images]) for x in invs}
    while layer and len(next(iter(layer))) < size:
        nxt = set()
        for s in layer:
            for x in invs:
                if x.images in s:
                    continue
                if all(tuple(x.images[i] for i in y) == tuple(y[i] for i in x.images) for y in s):
                    nxt.add(frozenset(s | {tuple(x.images[i] for i in y) for y in s}))
        layer = nxt
    return sorted(layer, key=lambda s: sorted(s))


def _as_subgroup(parent: GeneratedGroup, elems: frozenset) -> GeneratedGroup:
    return make_subgroup(parent, [Permutation(x) for x in sorted(elems)], known_order=len(elems))


def _conjugation_orbits(g: GeneratedGroup, points: list[Permutation]) -> list[int]:
    pts = {x.images for x in points}
    seen: set = set()
    sizes = []
    for x in sorted(pts):
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            py = Permutation._raw(y)
            for t in g.generators:
                z = py.conj(t).images
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        if not orbit <= pts:
            raise ValueError("point set is not invariant")
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes, reverse=True)


def _iterated_commutator(a: GeneratedGroup, b: GeneratedGroup, times: int, parent: GeneratedGroup) -> GeneratedGroup:
    cur = a
    for _ in range(times):
        cur = commutator_subgroup(cur, b, parent=parent)
    return cur


def _involution_classes(a: Amalgam) -> list[set]:
    """Classes of involutions of G1 ∪ G2 under the fusion generated by G1 and G2."""
    invs = {x.images for h in (a.g1, a.g2) for x in h.elements() if x.order() == 2}
    parent_of = {x: x for x in invs}

    def find(x):
        while parent_of[x] != x:
            parent_of[x] = parent_of[parent_of[x]]
            x = parent_of[x]
        return x

    for h in (a.g1, a.g2):
        members = {x.images for x in h.elements() if x.order() == 2}
        for x in members:
            px = Permutation._raw(x)
            for t in h.generators:
                y = px.conj(t).images
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent_of[max(rx, ry)] = min(rx, ry)
    classes: dict = {}
    for x in invs:
        classes.setdefault(find(x), set()).add(x)
    return sorted(classes.values(), key=lambda c: (len(c), sorted(c)))


# -- the fact list ------------------------------------------------------------
def check_g51_facts(a: Amalgam | None = None) -> FactReport:
    """Recompute the ten listed facts and the three claims about G12 of the G5 subamalgam."""
    a = a or catalog_amalgam("G5^1")
    if a.g12.order != 128:
        raise ValueError("expected the G5^1 amalgam with |G12| = 128")
    rep = FactReport()
    par = a.parent
    g1, g2, g12 = a.g1, a.g2, a.g12
    star = subamalgam(a)
    g12s = star.g12
    q1, q2 = p_core(g1, 2), p_core(g2, 2)
    z1, z2 = omega1(center(q1)), omega1(center(q2))
    v2 = normal_closure(g2, z1)
    u1 = normal_closure(g1, v2)
    w1 = commutator_subgroup(u1, o_upper_p(g1, 2), parent=par)

    # (1)
    rep.add("1a", "Z1 is elementary abelian of order 4", (z1.order, structure_probe(z1).elementary_abelian), (4, True))
    rep.add("1b", "|U1| = 2^5", u1.order, 32)
    rep.add("1c", "W1 is 4 x 4", _is_4x4(w1), True)
    fours = [s for s in _subgroups_of_order(q1, 16, max_gens=2) if _is_4x4(_as_subgroup(par, s))]
    w1_set = frozenset(x.images for x in w1.elements())
    rep.add("1d", "W1 is characteristic in Q1 (the only 4 x 4 subgroup of Q1)", len(fours), 1,
            passed=len(fours) == 1 and fours[0] == w1_set)

    # (2)
    rep.add("2a", "Z2 has order 2", z2.order, 2)
    rep.add("2b", "V2 is elementary abelian of order 2^3", (v2.order, structure_probe(v2).elementary_abelian), (8, True))

    # (3)
    normal8 = [s for s in _subgroups_of_order(u1, 8) if is_normal(_as_subgroup(par, s), g1)]
    rep.add("3a", "U1 has exactly one G1-normal subgroup of order 2^3", len(normal8), 1)
    f1 = _as_subgroup(par, normal8[0])
    f = centralizer(g1, f1)
    fd = structure_probe(f)
    rep.add("3b", "F = C_G1(F1) is elementary abelian of order 2^4", (f.order, fd.elementary_abelian), (16, True))
    ea16 = _elementary_abelian_of_order(g12, 16)
    f_set = frozenset(x.images for x in f.elements())
    rep.add("3c", "F is the only elementary abelian 2^4 in G12", len(ea16), 1,
            passed=len(ea16) == 1 and ea16[0] == f_set)

    # (4), (5): exhaustive over G12
    outside = [x for x in f.elements() if not g12s.contains(x)]
    ok4 = all(centralizer(g12, x).same_as(f) for x in outside)
    rep.add("4", "C_G12(x) = F for every x in F outside G12*", ok4, True)
    stray = [x for x in g12.elements() if x.order() == 2 and not g12s.contains(x) and not f.contains(x)]
    rep.add("5", "every involution of G12 outside G12* lies in F", len(stray), 0)

    # (6), (7), (8)
    fg = commutator_subgroup(f, g12, parent=par)
    rep.add("6", "[F, G12] is normal in G1 of order 8", (fg.order, is_normal(fg, g1)), (8, True))
    ok7 = all(not centralizer(g12, y).is_abelian() for y in fg.elements())
    rep.add("7", "C_G12(y) is non-abelian for every y in [F, G12]", ok7, True)
    f3 = _iterated_commutator(f, g12, 3, par)
    rep.add("8", "[F, G12, G12, G12] = Z2", (f3.order, f3.same_as(z2)), (2, True))

    # (9) and the G12-orbits on F
    rep.add("9", "G1-orbit lengths on F", _conjugation_orbits(g1, f.elements()), [8, 4, 3, 1])
    rep.add("9b", "G12-orbit lengths on F", _conjugation_orbits(g12, f.elements()), [8, 4, 2, 1, 1])

    # (10)
    # Read for the G5 subamalgam: the outer involutions of F form a third
    # class of the full amalgam, which is reported alongside.
    classes = _involution_classes(star)
    fg_set = {x.images for x in fg.elements()}
    rep.add("10", "at most two involution classes in the G5 subamalgam, each meeting [F, G12]",
            len(classes), len(classes), passed=len(classes) <= 2 and all(c & fg_set for c in classes))
    rep.add("10b", "involution classes of the full amalgam (informational)", len(_involution_classes(a)), 3)

    # claims about the G5 subamalgam, in the table orientation
    rep.add("L1", "|Z(G12*)| = 2", center(g12s).order, 2)
    derived = commutator_subgroup(g12s, g12s, parent=star.parent)
    lhs = omega1(center(p_core(star.g1, 2)))
    rhs = omega1(derived)
    rep.add("L2", "Omega_1(Z(O_2(G1*))) = Omega_1([G12*, G12*])", lhs.same_as(rhs), True)
    q2s = p_core(star.g2, 2)
    extraspecial = [h for h in _index_two_subgroups(g12s) if structure_probe(h).extraspecial]
    rep.add("L3", "O_2(G2*) is the only extraspecial subgroup of order 2^5 in G12*", len(extraspecial), 1,
            passed=len(extraspecial) == 1 and extraspecial[0].same_as(q2s))
    return rep
