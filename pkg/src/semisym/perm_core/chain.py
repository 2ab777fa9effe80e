"""Stabilizer chains built by the Schreier-Sims algorithm."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Iterator, Sequence

from .permutation import Permutation


@dataclass
class ChainLevel:
    """One level of a stabilizer chain.

    ``gens`` are the strong generators fixing every earlier base point and
    ``transversal`` maps each point ``b`` of the basic orbit to a pair
    ``(u, u^-1)`` with ``point^u == b``.
    """

    point: int
    degree: int
    gens: list[Permutation] = field(default_factory=list)
    transversal: dict[int, tuple[Permutation, Permutation]] = field(default_factory=dict)
    checked: set = field(default_factory=set, repr=False)

    def add_generators(self, new: Iterable[Permutation]) -> None:
        self.gens.extend(new)
        if not self.transversal:
            ident = Permutation.identity(self.degree)
            self.transversal[self.point] = (ident, ident)
        # Existing representatives are never replaced, so Schreier generators
        # that were already checked stay valid.
        queue = list(self.transversal)
        trans = self.transversal
        gens = self.gens
        for pt in queue:
            u = trans[pt][0]
            for s in gens:
                img = s.images[pt]
                if img not in trans:
                    v = u * s
                    trans[img] = (v, v.inverse())
                    queue.append(img)

    @property
    def orbit(self) -> list[int]:
        return list(self.transversal)


class StabChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, degree: int, levels: list[ChainLevel]):
        self.degree = degree
        self.levels = levels

    # -- construction -------------------------------------------------
    @classmethod
    def build(
        cls,
        degree: int,
        generators: Sequence[Permutation],
        base_prefix: Sequence[int] = (),
        known_order: int | None = None,
        seed: int = 0,
    ) -> StabChain:
        """Build a chain for ``<generators>``.

        The default is the deterministic algorithm. When ``known_order`` is
        given, random elements are sifted until the orbit product reaches it;
        the product of basic orbit lengths of a partial chain never exceeds the
        group order, so reaching it certifies completeness.
        """
        chain = cls(degree, [ChainLevel(b, degree) for b in base_prefix])
        for lvl in chain.levels:
            lvl.add_generators([])
        gens = [g for g in generators if not g.is_identity()]
        for g in gens:
            chain._insert(g, 0)
        if known_order is not None:
            chain._random_fill(gens, known_order, seed)
            if chain.order() != known_order:
                raise RuntimeError("random Schreier-Sims did not reach the known order")
            return chain
        chain._complete()
        return chain

    def _insert(self, h: Permutation, start: int) -> int:
        """Add ``h`` (fixing the first ``start`` base points) as a strong
        generator on the levels it belongs to; return its deepest level."""
        j = start
        while j < len(self.levels) and h.images[self.levels[j].point] == self.levels[j].point:
            j += 1
        if j == len(self.levels):
            lvl = ChainLevel(h.first_moved_point(), self.degree)
            lvl.add_generators([])
            self.levels.append(lvl)
        for lvl in self.levels[start:j + 1]:
            lvl.add_generators([h])
        return j

    def _complete(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            added_at = None
            for beta in list(lvl.transversal):
                u_beta = lvl.transversal[beta][0]
                for si, s in enumerate(lvl.gens):
                    key = (beta, si)
                    if key in lvl.checked:
                        continue
                    lvl.checked.add(key)
                    img = s.images[beta]
                    sg = u_beta * s * lvl.transversal[img][1]
                    if sg.is_identity():
                        continue
                    h, j = self.sift(sg, i + 1)
                    if j == len(self.levels) and h.is_identity():
                        continue
                    added_at = self._insert(h, i + 1)
                    break
                if added_at is not None:
                    break
            i = added_at if added_at is not None else i - 1

    def _random_fill(self, gens: list[Permutation], target: int, seed: int) -> None:
        if not gens:
            return
        rng = random.Random(seed)
        pool = list(gens) * max(1, 10 // len(gens) + 1)
        acc = Permutation.identity(self.degree)
        stale = 0
        while self.order() < target:
            a, b = rng.sample(range(len(pool)), 2)
            pool[a] = pool[a] * pool[b] if rng.random() < 0.5 else pool[a] * pool[b].inverse()
            acc = acc * pool[a]
            h, j = self.sift(acc, 0)
            if j == len(self.levels) and h.is_identity():
                stale += 1
                if stale > 2000:
                    raise RuntimeError("random Schreier-Sims stalled below the known order")
                continue
            stale = 0
            self._insert(h, 0)

    # -- queries ------------------------------------------------------
    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the levels from ``start``; return the residue and
        the level at which stripping stopped (``len(levels)`` if it did not)."""
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            beta = g.images[lvl.point]
            rep = lvl.transversal.get(beta)
            if rep is None:
                return g, i
            if beta != lvl.point:
                g = g * rep[1]
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} != {self.degree}")
        h, j = self.sift(g)
        return j == len(self.levels) and h.is_identity()

    def order(self) -> int:
        return prod(len(lvl.transversal) for lvl in self.levels)

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(self.levels[0].gens) if self.levels else []

    def orbit_sizes(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self.levels]

    def elements(self) -> Iterator[Permutation]:
        """Every group element exactly once, as ``u_k ... u_1`` products."""
        ident = Permutation.identity(self.degree)
        reps = [[u for u, _ in lvl.transversal.values()] for lvl in self.levels]

        def walk(i: int, acc: Permutation) -> Iterator[Permutation]:
            if i < 0:
                yield acc
                return
            for u in reps[i]:
                yield from walk(i - 1, acc * u)

        yield from walk(len(reps) - 1, ident)

    def random_element(self, rng: random.Random) -> Permutation:
        g = Permutation.identity(self.degree)
        for lvl in reversed(self.levels):
            g = g * lvl.transversal[rng.choice(list(lvl.transversal))][0]
        return g
