"""Finitely generated permutation groups backed by a stabilizer chain."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .chain import StabChain
from .permutation import Permutation

DEFAULT_ENUMERATION_BOUND = 100_000


class EnumerationBoundExceeded(ValueError):
    """Raised when an operation would enumerate more elements than allowed."""


class GeneratedGroup:
    """The group generated by ``generators`` acting on ``range(degree)``.

    The stabilizer chain is built eagerly. ``rng_seed`` feeds every randomized
    routine that takes no explicit generator.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        name: str | None = None,
        rng_seed: int = 0,
        known_order: int | None = None,
        base_prefix: Sequence[int] = (),
    ):
        generators = list(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = generators
        self.name = name
        self.rng_seed = rng_seed
        self.chain = StabChain.build(
            degree, generators, base_prefix=base_prefix, known_order=known_order, seed=rng_seed
        )
        self._elements: frozenset | None = None

    # -- basic queries ------------------------------------------------
    @property
    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order

    def contains(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def __contains__(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_subgroup_of(self, other: GeneratedGroup) -> bool:
        return self.order <= other.order and all(other.contains(g) for g in self.generators)

    def same_as(self, other: GeneratedGroup) -> bool:
        """Equality as subgroups of Sym(degree): equal order plus containment."""
        return self.degree == other.degree and self.order == other.order and self.is_subgroup_of(other)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label}: degree {self.degree}, order {self.order}>"

    # -- orbits -------------------------------------------------------
    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for pt in queue:
            for g in self.generators:
                img = g.images[pt]
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return sorted(queue)

    def orbits(self) -> list[list[int]]:
        """Orbits on all points, each sorted, listed by least element."""
        seen: set[int] = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    # -- elements -----------------------------------------------------
    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Permutation]:
        if self.order > bound:
            raise EnumerationBoundExceeded(f"order {self.order} exceeds enumeration bound {bound}")
        return list(self.chain.elements())

    def element_set(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> frozenset:
        if self._elements is None:
            self._elements = frozenset(self.elements(bound))
        return self._elements

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        return self.chain.random_element(rng or random.Random(self.rng_seed))

    # -- derived groups -----------------------------------------------
    def subgroup(self, generators: Iterable[Permutation], name: str | None = None, **kw) -> Subgroup:
        return Subgroup(self, generators, name=name, **kw)

    def as_subgroup(self) -> Subgroup:
        """This group viewed as a subgroup of itself."""
        return Subgroup(self, self.generators, name=self.name, check=False)

    def pointwise_stabilizer(self, points: Sequence[int]) -> Subgroup:
        """The subgroup fixing every point of ``points``."""
        points = list(points)
        chain = StabChain.build(self.degree, self.generators, base_prefix=points)
        k = len(points)
        gens = chain.levels[k].gens if k < len(chain.levels) else []
        return Subgroup(self, gens, check=False)

    def stabilizer(self, point: int) -> Subgroup:
        return self.pointwise_stabilizer([point])

    def conjugate(self, x: Permutation) -> GeneratedGroup:
        """The group ``x^-1 G x`` (a subgroup of the same parent when x lies in it)."""
        xi = x.inverse()
        gens = [xi * g * x for g in self.generators]
        parent = getattr(self, "parent", None)
        if parent is not None and parent.contains(x):
            return Subgroup(parent, gens, check=False, known_order=self.order)
        return GeneratedGroup(self.degree, gens, known_order=self.order, rng_seed=self.rng_seed)


class Subgroup(GeneratedGroup):
    """A group together with the ambient group it was taken inside."""

    def __init__(
        self,
        parent: GeneratedGroup,
        generators: Iterable[Permutation],
        name: str | None = None,
        check: bool = True,
        known_order: int | None = None,
    ):
        generators = list(generators)
        if check:
            for g in generators:
                if not parent.contains(g):
                    raise ValueError("subgroup generator is not an element of the parent group")
        super().__init__(parent.degree, generators, name=name, rng_seed=parent.rng_seed, known_order=known_order)
        self.parent = parent

    @property
    def group(self) -> GeneratedGroup:
        return self

    def index(self) -> int:
        return self.parent.order // self.order


def group_order(g: GeneratedGroup) -> int:
    return g.order


def contains(g: GeneratedGroup, p: Permutation) -> bool:
    return g.contains(p)


def orbits(g: GeneratedGroup) -> list[list[int]]:
    return g.orbits()
