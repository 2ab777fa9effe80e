"""Characteristic and normal subgroups, Sylow subgroups and structure probes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .group import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationBoundExceeded,
    GeneratedGroup,
    Subgroup,
)
from .permutation import Permutation, p_part, p_prime_part

SMALL_GROUP_SCAN = 10_000


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part_of(n: int, p: int) -> int:
    pk = 1
    while n % p == 0:
        n //= p
        pk *= p
    return pk


def is_power_of(n: int, p: int) -> bool:
    return p_part_of(n, p) == n


def ambient(g: GeneratedGroup) -> GeneratedGroup:
    """The outermost group above ``g`` along parent links."""
    while isinstance(g, Subgroup):
        g = g.parent
    return g


def make_subgroup(parent: GeneratedGroup, gens: Iterable[Permutation], name: str | None = None,
                  known_order: int | None = None) -> Subgroup:
    gens = [x for x in gens if not x.is_identity()]
    return Subgroup(parent, gens, name=name, check=False, known_order=known_order)


def generate_incrementally(parent: GeneratedGroup, candidates: Iterable[Permutation],
                           start: Sequence[Permutation] = ()) -> Subgroup:
    """Subgroup generated by ``start`` and ``candidates``, keeping only the
    candidates that enlarge the group seen so far."""
    gens = [x for x in start if not x.is_identity()]
    current = make_subgroup(parent, gens)
    for x in candidates:
        if not current.contains(x):
            gens.append(x)
            current = make_subgroup(parent, gens)
    return current


# -- orbit and stabilizer ---------------------------------------------------
def orbit_stabilizer(
    g: GeneratedGroup,
    obj,
    act: Callable,
    key: Callable[[object], Hashable] = lambda o: o,
    want_stabilizer: bool = True,
) -> tuple[list, Subgroup | None]:
    """Orbit of ``obj`` under ``g`` and its stabilizer.

    Schreier generators are added in breadth-first order until the
    stabilizer reaches ``|g| / |orbit|``.
    """
    ident = g.identity()
    reps: dict = {key(obj): (obj, ident)}
    queue = [key(obj)]
    for k in queue:
        o, u = reps[k]
        for s in g.generators:
            o2 = act(o, s)
            k2 = key(o2)
            if k2 not in reps:
                reps[k2] = (o2, u * s)
                queue.append(k2)
    orbit = [reps[k][0] for k in queue]
    if not want_stabilizer:
        return orbit, None
    target = g.order // len(orbit)
    gens: list[Permutation] = []
    stab = make_subgroup(g, gens)
    if stab.order < target:
        done = False
        for k in queue:
            o, u = reps[k]
            for s in g.generators:
                v = reps[key(act(o, s))][1]
                sg = u * s * v.inverse()
                if not stab.contains(sg):
                    gens.append(sg)
                    stab = make_subgroup(g, gens)
                    if stab.order == target:
                        done = True
                        break
            if done:
                break
    if stab.order != target:
        raise RuntimeError("orbit-stabilizer inconsistency")
    return orbit, stab


def conj(x: Permutation, s: Permutation) -> Permutation:
    return s.inverse() * x * s


def conj_set(xs: frozenset, s: Permutation) -> frozenset:
    """Conjugate a set of image tuples by ``s``."""
    si = s.inverse().images
    sg = s.images.__getitem__
    return frozenset(tuple(map(sg, map(x.__getitem__, si))) for x in xs)


def centralizer(g: GeneratedGroup, x) -> Subgroup:
    """C_g(x) for an element or a group ``x``."""
    if isinstance(x, Permutation):
        return orbit_stabilizer(g, x, conj)[1]
    c: GeneratedGroup = g
    for y in x.generators:
        c = orbit_stabilizer(c, y, conj)[1]
    return c if isinstance(c, Subgroup) else g.as_subgroup()


def normalizer(g: GeneratedGroup, h: GeneratedGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> Subgroup:
    """N_g(h), via the conjugation orbit of h's element set."""
    if h.order == 1:
        return make_subgroup(g, g.generators, known_order=g.order)
    if all(h.contains(conj(y, s)) for y in h.generators for s in g.generators):
        return make_subgroup(g, g.generators, known_order=g.order)
    elems = _sorted_rows(np.array([x.images for x in h.elements(bound)], dtype=_index_dtype(g.degree)))
    return orbit_stabilizer(g, elems, _conj_rows, key=lambda a: a.tobytes())[1]


def _index_dtype(n: int):
    return np.uint8 if n <= 256 else np.uint16 if n <= 65536 else np.uint32


def _sorted_rows(a: np.ndarray) -> np.ndarray:
    return a[np.lexsort(a.T[::-1])]


def _conj_rows(a: np.ndarray, s: Permutation) -> np.ndarray:
    """Conjugate every row (an element's images) by ``s`` and re-sort the rows."""
    simg = np.asarray(s.images, dtype=a.dtype)
    sinv = np.asarray(s.inverse().images, dtype=np.intp)
    return _sorted_rows(simg[a[:, sinv]])


def conjugacy_class(g: GeneratedGroup, x: Permutation) -> list[Permutation]:
    return orbit_stabilizer(g, x, conj, want_stabilizer=False)[0]


# -- normal subgroups -------------------------------------------------------
def normal_closure(g: GeneratedGroup, s, extra: Iterable[Permutation] = ()) -> Subgroup:
    """Smallest normal subgroup of ``g`` containing ``s`` (a group or a list of elements)."""
    start = list(s.generators) if isinstance(s, GeneratedGroup) else list(s)
    start += list(extra)
    # Keep only elements not already generated, so generator lists stay short.
    gens: list[Permutation] = []
    n = make_subgroup(g, [])
    for x in start:
        if not n.contains(x):
            gens.append(x)
            n = make_subgroup(g, gens)
    i = 0
    while i < len(gens):
        x = gens[i]
        for t in g.generators:
            y = conj(x, t)
            if not n.contains(y):
                gens.append(y)
                n = make_subgroup(g, gens)
        i += 1
    return n


def is_normal(h: GeneratedGroup, g: GeneratedGroup) -> bool:
    return all(h.contains(conj(x, t)) for x in h.generators for t in g.generators)


def intersect(a: GeneratedGroup, b: GeneratedGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> Subgroup:
    """a ∩ b by enumerating the smaller group and testing membership in the other."""
    small, big = (a, b) if a.order <= b.order else (b, a)
    if small.order > bound:
        raise EnumerationBoundExceeded(f"both groups exceed the enumeration bound {bound}")
    if small.is_subgroup_of(big):
        return make_subgroup(getattr(small, "parent", big), small.generators, known_order=small.order)
    parent = getattr(a, "parent", None) or getattr(b, "parent", None) or big
    common = sorted(x for x in small.elements(bound) if big.contains(x))
    return generate_incrementally(parent, common)


def core_in(k: GeneratedGroup, hs: Sequence[GeneratedGroup], bound: int = DEFAULT_ENUMERATION_BOUND) -> Subgroup:
    """Largest subgroup of ``k`` normalized by every group in ``hs``.

    Iterates ``K <- K ∩ K^t`` over the generators ``t`` of the ``hs`` until
    nothing changes; at the fixpoint every generator normalizes K.
    """
    parent = getattr(k, "parent", None) or k
    cur: GeneratedGroup = k
    movers = [t for h in hs for t in h.generators]
    changed = True
    while changed and cur.order > 1:
        changed = False
        for t in movers:
            if all(cur.contains(conj(x, t)) for x in cur.generators):
                continue
            conjugate = make_subgroup(parent, [conj(x, t) for x in cur.generators], known_order=cur.order)
            cur = intersect(cur, conjugate, bound)
            changed = True
    return make_subgroup(parent, cur.generators, known_order=cur.order)


def commutator_subgroup(a: GeneratedGroup, b: GeneratedGroup, parent: GeneratedGroup | None = None) -> Subgroup:
    """[A, B]: the normal closure in <A, B> of the generator commutators."""
    parent = parent or getattr(a, "parent", None) or a
    joint = make_subgroup(parent, list(a.generators) + list(b.generators))
    comms = [x.commutator(y) for x in a.generators for y in b.generators]
    n = normal_closure(joint, comms)
    return make_subgroup(parent, n.generators, known_order=n.order)


def derived_subgroup(g: GeneratedGroup) -> Subgroup:
    return commutator_subgroup(g, g, parent=getattr(g, "parent", None) or g)


def derived_length(g: GeneratedGroup) -> int | None:
    """Derived length, or None for an insoluble group."""
    cur: GeneratedGroup = g
    n = 0
    while cur.order > 1:
        nxt = derived_subgroup(cur)
        if nxt.order == cur.order:
            return None
        cur = nxt
        n += 1
    return n


def is_soluble(g: GeneratedGroup) -> bool:
    return derived_length(g) is not None


def center(g: GeneratedGroup) -> Subgroup:
    c = centralizer(g, g)
    parent = getattr(g, "parent", None) or g
    return make_subgroup(parent, c.generators, known_order=c.order)


def join(parent: GeneratedGroup, *groups: GeneratedGroup) -> Subgroup:
    return make_subgroup(parent, [x for h in groups for x in h.generators])


# -- p-local subgroups ------------------------------------------------------
def _rng(g: GeneratedGroup, seed: int | None) -> random.Random:
    return random.Random(g.rng_seed if seed is None else seed)


def sylow_subgroup(g: GeneratedGroup, p: int, seed: int | None = None) -> Subgroup:
    """A Sylow p-subgroup, grown inside successive normalizers.

    If P is a p-subgroup that is not yet Sylow then N_g(P)/P has order
    divisible by p, so the p-part of some element of N_g(P) lies outside P
    and P<y> is a larger p-subgroup.
    """
    target = p_part_of(g.order, p)
    parent = getattr(g, "parent", None) or g
    rng = _rng(g, seed)
    gens: list[Permutation] = []
    cur = make_subgroup(parent, gens)
    while cur.order < target:
        n = normalizer(g, cur) if cur.order > 1 else g
        y = None
        for _ in range(200):
            cand = p_part(n.random_element(rng), p)
            if not cand.is_identity() and not cur.contains(cand):
                y = cand
                break
        if y is None:
            if n.order > SMALL_GROUP_SCAN:
                raise RuntimeError("Sylow search found no new p-element")
            for x in n.elements():
                cand = p_part(x, p)
                if not cur.contains(cand):
                    y = cand
                    break
        gens.append(y)
        cur = make_subgroup(parent, gens)
    return make_subgroup(parent, gens, name=f"Sylow {p}")


def p_core(g: GeneratedGroup, p: int, seed: int | None = None) -> Subgroup:
    """O_p(g): the core of a Sylow p-subgroup."""
    parent = getattr(g, "parent", None) or g
    if g.order % p:
        return make_subgroup(parent, [])
    syl = sylow_subgroup(g, p, seed)
    core = core_in(syl, [g])
    return make_subgroup(parent, core.generators, name=f"O_{p}", known_order=core.order)


def o_upper_p(g: GeneratedGroup, p: int, seed: int | None = None) -> Subgroup:
    """O^p(g): normal closure of p'-parts, enlarged until the index is a p-power."""
    parent = getattr(g, "parent", None) or g
    n = normal_closure(g, [p_prime_part(x, p) for x in g.generators])
    rng = _rng(g, seed)
    misses = 0
    while not is_power_of(g.order // n.order, p):
        y = p_prime_part(g.random_element(rng), p)
        if n.contains(y):
            misses += 1
            if misses > 200 and g.order <= SMALL_GROUP_SCAN:
                y = next(p_prime_part(x, p) for x in g.elements() if not n.contains(p_prime_part(x, p)))
            else:
                continue
        misses = 0
        n = normal_closure(g, n, [y])
    return make_subgroup(parent, n.generators, name=f"O^{p}", known_order=n.order)


def is_p_group(g: GeneratedGroup, p: int | None = None) -> bool:
    if g.order == 1:
        return True
    primes = prime_factors(g.order)
    return len(primes) == 1 and (p is None or primes[0] == p)


def omega1(g: GeneratedGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> Subgroup:
    """Subgroup generated by the elements of order p of a p-group."""
    if not is_p_group(g):
        raise ValueError("omega1 requires a p-group")
    parent = getattr(g, "parent", None) or g
    if g.order == 1:
        return make_subgroup(parent, [])
    p = prime_factors(g.order)[0]
    low = sorted(x for x in g.elements(bound) if x.order() == p)
    return generate_incrementally(parent, low)


def frattini_of_p_group(g: GeneratedGroup) -> Subgroup:
    """Φ(P) = P' P^p for a p-group P."""
    parent = getattr(g, "parent", None) or g
    if g.order == 1:
        return make_subgroup(parent, [])
    p = prime_factors(g.order)[0]
    d = derived_subgroup(g)
    powers = [x ** p for x in g.generators]
    return normal_closure(g, list(d.generators) + powers)


# -- chief factors ----------------------------------------------------------
@dataclass
class ChiefFactorReport:
    factor_orders: list[int] = field(default_factory=list)
    non_central: list[bool] = field(default_factory=list)

    @property
    def eta(self) -> int:
        return sum(self.non_central)


def eta_count(g: GeneratedGroup, q: GeneratedGroup | None = None,
              bound: int = DEFAULT_ENUMERATION_BOUND) -> ChiefFactorReport:
    """Chief factors of ``g`` inside ``q`` (default O_2(g)) and which are non-central.

    Each step adds the smallest g-closure ``<Q_i, x>^g`` over the elements x of
    q outside the current term Q_i, which is a minimal normal subgroup of
    g/Q_i inside q/Q_i.
    """
    if q is None:
        q = p_core(g, 2)
    report = ChiefFactorReport()
    cur = make_subgroup(g, [])
    elems = sorted(q.elements(bound))
    while cur.order < q.order:
        best = None
        for x in elems:
            if cur.contains(x):
                continue
            m = normal_closure(g, cur, [x])
            if best is None or m.order < best.order:
                best = m
                if m.order == cur.order * prime_factors(q.order)[0]:
                    break
        acting = any(not cur.contains(y.commutator(t)) for y in best.generators for t in g.generators)
        report.factor_orders.append(best.order // cur.order)
        report.non_central.append(acting)
        cur = best
    return report


# -- fingerprints -----------------------------------------------------------
@dataclass(frozen=True)
class StructureDescriptor:
    order: int
    abelian: bool
    elementary_abelian: bool
    extraspecial: bool
    exponent: int
    center_order: int
    derived_length: int | None
    involutions: int
    order_profile: tuple = ()


def structure_probe(g: GeneratedGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> StructureDescriptor:
    """Isomorphism-invariant fingerprint of a small group."""
    elems = g.elements(bound)
    orders = [x.order() for x in elems]
    exponent = 1
    for o in orders:
        exponent = exponent * o // gcd(exponent, o)
    profile: dict[int, int] = {}
    for o in orders:
        profile[o] = profile.get(o, 0) + 1
    abelian = g.is_abelian()
    primes = prime_factors(g.order)
    elem_ab = abelian and len(primes) == 1 and exponent == primes[0]
    z = center(g)
    extraspecial = False
    if len(primes) == 1 and not abelian and z.order == primes[0]:
        d = derived_subgroup(g)
        phi = frattini_of_p_group(g)
        extraspecial = d.order == z.order == phi.order and d.is_subgroup_of(z) and phi.is_subgroup_of(z)
    return StructureDescriptor(
        order=g.order,
        abelian=abelian,
        elementary_abelian=elem_ab,
        extraspecial=extraspecial,
        exponent=exponent,
        center_order=z.order,
        derived_length=derived_length(g),
        involutions=profile.get(2, 0),
        order_profile=tuple(sorted(profile.items())),
    )
