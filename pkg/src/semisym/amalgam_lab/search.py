"""Searches for amalgam members and symmetrizing elements inside a group."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..perm_core import (
    GeneratedGroup,
    Permutation,
    Subgroup,
    core_in,
    join,
    make_subgroup,
    normalizer,
)
from ..perm_core.structure import frattini_of_p_group
from .amalgam import Amalgam

FULL_SCAN_BOUND = 100_000
SYMMETRIZER_SCAN_BOUND = 100_000


@dataclass
class OvergroupSearch:
    subgroups: list[Subgroup]
    complete: bool
    method: str


def _extends_by_three(s: GeneratedGroup, t: Permutation) -> bool:
    """True when S ∪ St ∪ St² is a group, i.e. t^i x t^-j ∈ S for some j,
    for every generator x of S and i = 1, 2."""
    ti = [t, t * t]
    tinv = [Permutation.identity(t.degree), t.inverse(), (t * t).inverse()]
    for x in s.generators:
        for a in ti:
            if not any(s.contains(a * x * b) for b in tinv):
                return False
    return True


def _index_two_subgroups(s: GeneratedGroup) -> list[Subgroup]:
    """Maximal subgroups of a 2-group: kernels of maps S/Φ(S) -> GF(2)."""
    phi = frattini_of_p_group(s)
    basis: list[Permutation] = []
    cur = phi
    for x in sorted(s.elements()):
        if not cur.contains(x):
            basis.append(x)
            cur = make_subgroup(s, list(phi.generators) + basis)
    out = []
    r = len(basis)
    for f in range(1, 2 ** r):
        bits = [(f >> i) & 1 for i in range(r)]
        i0 = bits.index(1)
        gens = list(phi.generators)
        for i, b in enumerate(bits):
            if not b:
                gens.append(basis[i])
            elif i != i0:
                gens.append(basis[i] * basis[i0])
        out.append(make_subgroup(s, gens))
    return out


def _dedupe(found: list[Subgroup]) -> list[Subgroup]:
    out: list[Subgroup] = []
    for h in found:
        if not any(h.same_as(k) for k in out):
            out.append(h)
    return out


def find_index3_overgroups(g: GeneratedGroup, s: GeneratedGroup, scan_bound: int = FULL_SCAN_BOUND) -> OvergroupSearch:
    """All subgroups H of g containing the 2-subgroup s with [H:s] = 3.

    Up to ``scan_bound`` every element of order 3 is tried. Above it the
    search runs inside N_g(K) for K = s and for each index-2 subgroup K of s:
    s has index 3 in H, so the core of s in H has index at most 2 in s and is
    normal in H. Both routes are exhaustive.
    """
    found = []
    if g.order <= scan_bound:
        pool = [(g, "full scan")]
        method = "full scan"
    else:
        pool = [(normalizer(g, k), "normalizer") for k in [s] + _index_two_subgroups(s)]
        method = "normalizers of s and its index-2 subgroups"
    seen: set = set()
    for n, _ in pool:
        for t in n.elements(FULL_SCAN_BOUND):
            if t.images in seen or t.order() != 3:
                continue
            seen.add(t.images)
            if s.contains(t):
                continue
            if _extends_by_three(s, t):
                h = make_subgroup(g, list(s.generators) + [t], known_order=3 * s.order)
                found.append(h)
    subgroups = _dedupe(found)
    subgroups.sort(key=lambda h: sorted(x.images for x in h.generators))
    return OvergroupSearch(subgroups, True, method)


def locate_amalgams(g: GeneratedGroup, s: GeneratedGroup, overgroups: list[Subgroup] | None = None) -> list[Amalgam]:
    """Pairs of index-3 overgroups of s that form Goldschmidt amalgams with completion g."""
    if overgroups is None:
        overgroups = find_index3_overgroups(g, s).subgroups
    out = []
    for i, h1 in enumerate(overgroups):
        for h2 in overgroups[i + 1:]:
            if join(g, h1, h2).order != g.order:
                continue
            if core_in(s, [h1, h2]).order != 1:
                continue
            g12 = make_subgroup(g, s.generators, name="G12", known_order=s.order)
            out.append(Amalgam(g, h1, h2, g12))
    return out


@dataclass
class SymmetrizerResult:
    status: str  # "found" | "exhausted" | "budget-exceeded"
    element: Permutation | None = None
    examined: int = 0
    details: dict = field(default_factory=dict)


def _swaps(a: Amalgam, x: Permutation) -> bool:
    xi = x.inverse()
    if not all(a.g2.contains(xi * y * x) for y in a.g1.generators):
        return False
    return a.g12.contains(x * x)


def find_symmetrizing_element(a: Amalgam, ambient: GeneratedGroup, budget: int = 200_000,
                              seed: int = 0) -> SymmetrizerResult:
    """Look for x in ``ambient`` with G1^x = G2 and x² ∈ G12.

    Such an x normalizes G12, so only N_ambient(G12) is searched: every
    element when it is small enough, else ``budget`` seeded random samples.
    """
    if a.g1.same_as(a.g2):
        return SymmetrizerResult("found", Permutation.identity(a.parent.degree), 1)
    if a.g1.order != a.g2.order:
        return SymmetrizerResult("exhausted", None, 0, {"reason": "member orders differ"})
    n = normalizer(ambient, a.g12)
    if n.order <= SYMMETRIZER_SCAN_BOUND:
        count = 0
        for x in sorted(n.elements(SYMMETRIZER_SCAN_BOUND)):
            count += 1
            if _swaps(a, x):
                return SymmetrizerResult("found", x, count, {"normalizer_order": n.order})
        return SymmetrizerResult("exhausted", None, count, {"normalizer_order": n.order})
    rng = random.Random(seed)
    for count in range(1, budget + 1):
        x = n.random_element(rng)
        if _swaps(a, x):
            return SymmetrizerResult("found", x, count, {"normalizer_order": n.order})
    return SymmetrizerResult("budget-exceeded", None, budget, {"normalizer_order": n.order})
