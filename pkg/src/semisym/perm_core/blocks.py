"""Block systems of transitive permutation groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .group import GeneratedGroup
from .permutation import Permutation


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def is_trivial(self) -> bool:
        return self.block_count == 1 or self.block_size == 1

    def refines(self, other: BlockSystem) -> bool:
        """True if every block of self lies inside a block of other."""
        where = {pt: i for i, b in enumerate(other.blocks) for pt in b}
        return all(len({where[pt] for pt in b}) == 1 for b in self.blocks)


def _generators(g) -> tuple[int, list[Permutation]]:
    if isinstance(g, GeneratedGroup):
        return g.degree, list(g.generators)
    gens = list(g)
    return gens[0].degree, gens


def minimal_block(degree: int, gens: Sequence[Permutation], a: int, b: int) -> BlockSystem:
    """Finest block system in which ``a`` and ``b`` share a block (union-find closure)."""
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        for s in gens:
            pending.append((s.images[x], s.images[y]))
    classes: dict[int, list[int]] = {}
    for pt in range(degree):
        classes.setdefault(find(pt), []).append(pt)
    blocks = tuple(sorted(tuple(c) for c in classes.values()))
    return BlockSystem(blocks)


def _is_transitive(degree: int, gens: Sequence[Permutation]) -> bool:
    seen = {0}
    queue = [0]
    for pt in queue:
        for s in gens:
            img = s.images[pt]
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen) == degree


def block_systems(g) -> list[BlockSystem]:
    """All minimal non-trivial block systems of a transitive group.

    ``g`` is a GeneratedGroup or a list of generating permutations; only the
    generators are used, so large actions need no stabilizer chain.
    """
    degree, gens = _generators(g)
    if not _is_transitive(degree, gens):
        raise ValueError("block systems need a transitive action")
    found: dict[tuple, BlockSystem] = {}
    for b in range(1, degree):
        bs = minimal_block(degree, gens, 0, b)
        if not bs.is_trivial():
            found.setdefault(bs.blocks, bs)
    systems = list(found.values())
    minimal = [s for s in systems if not any(t is not s and t.refines(s) for t in systems)]
    return sorted(minimal, key=lambda s: (s.block_size, s.blocks))


def is_primitive(g) -> bool:
    degree, gens = _generators(g)
    if not _is_transitive(degree, gens):
        raise ValueError("primitivity needs a transitive action")
    return all(minimal_block(degree, gens, 0, b).block_count == 1 for b in range(1, degree))
