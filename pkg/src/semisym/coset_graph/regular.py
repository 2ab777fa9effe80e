"""Regular normal subgroups of a completion acting on its coset graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..perm_core import (
    GeneratedGroup,
    Subgroup,
    core_in,
    intersect,
    join,
    make_subgroup,
    normal_closure,
    sylow_subgroup,
)
from ..perm_core.structure import prime_factors
from .graph import CosetGraph, is_semiregular

RADICAL_SCAN_BOUND = 10_000


class RadicalTooLarge(RuntimeError):
    """The odd radical is too big for the normal-subgroup scan."""


def odd_radical(g: GeneratedGroup) -> Subgroup:
    """The largest normal subgroup of odd order.

    Grown one layer at a time: given K, the preimage of O_p(G/K) is the core
    in G of P K for a Sylow p-subgroup P, so no quotient action is needed.
    Odd-order groups are soluble, so when no odd prime gives a larger core
    K is the whole radical.
    """
    parent = getattr(g, "parent", None) or g
    k: GeneratedGroup = make_subgroup(parent, [])
    primes = [p for p in prime_factors(g.order) if p != 2]
    sylows = {p: sylow_subgroup(g, p) for p in primes}
    grown = True
    while grown:
        grown = False
        for p in primes:
            pk = join(parent, sylows[p], k)
            core = core_in(pk, [g])
            if core.order > k.order:
                k, grown = core, True
    return make_subgroup(parent, k.generators, name="O(G)", known_order=k.order)


@dataclass
class RegularNormalReport:
    subgroup: Subgroup
    radical_order: int
    candidates: list[int] = field(default_factory=list)
    unique: bool = True


def regular_normal_scan(cg: CosetGraph, bound: int = RADICAL_SCAN_BOUND) -> RegularNormalReport:
    """Product of the semiregular normal subgroups inside the odd radical.

    Every normal subgroup is generated by the normal closures of its
    elements, and a normal subgroup is semiregular exactly when it meets G1
    and G2 trivially, so it suffices to scan the closures <x>^G. If their
    product is not semiregular (possible only for soluble G) the closures
    are added greedily in scan order and ``unique`` is False.
    """
    a = cg.amalgam
    g = a.parent
    rad = odd_radical(g)
    if rad.order == 1:
        return RegularNormalReport(make_subgroup(g, [], name="R"), 1)
    if rad.order > bound:
        raise RadicalTooLarge(f"odd radical of order {rad.order} exceeds the scan bound {bound}")

    def semiregular(n: GeneratedGroup) -> bool:
        return intersect(n, a.g1).order == 1 and intersect(n, a.g2).order == 1

    closures: list[Subgroup] = []
    for x in sorted(rad.elements()):
        if x.is_identity() or any(c.contains(x) for c in closures):
            continue
        n = normal_closure(g, [x])
        if semiregular(n) and not any(n.same_as(c) for c in closures):
            closures.append(n)
    orders = [c.order for c in closures]
    product = join(g, *closures) if closures else make_subgroup(g, [])
    if semiregular(product):
        r, unique = product, True
    else:
        r = make_subgroup(g, [])
        for c in closures:
            trial = join(g, r, c)
            if semiregular(trial):
                r = trial
        unique = False
    r = make_subgroup(g, r.generators, name="R", known_order=r.order)
    if not is_semiregular(cg, r):
        raise RuntimeError("regular normal subgroup fails the vertex-orbit check")
    return RegularNormalReport(r, rad.order, orders, unique)


def max_regular_normal(cg: CosetGraph, bound: int = RADICAL_SCAN_BOUND) -> Subgroup:
    """The largest normal subgroup of odd order acting semiregularly on the vertices."""
    return regular_normal_scan(cg, bound).subgroup
