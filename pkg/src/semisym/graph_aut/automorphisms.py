"""Automorphism groups of small graphs by individualization and refinement.

Colour refinement is the usual 1-dimensional Weisfeiler-Leman step: a
vertex's new colour is the rank of (old colour, sorted neighbour colours)
among all such rows, so colours are canonical and two search paths can be
compared cell by cell. The search keeps the first path to a discrete
partition and, level by level from the bottom, tries to map its base point
to every other vertex of the same cell that is not already known to be in
its orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from ..perm_core import GeneratedGroup, Permutation
from .graph import SimpleGraph

DEFAULT_VERTEX_CAP = 50_000


class GraphTooLarge(ValueError):
    """The graph exceeds the configured vertex cap."""


def _rank(values: np.ndarray) -> np.ndarray:
    return np.unique(values, return_inverse=True)[1].reshape(-1)


class Refiner:
    def __init__(self, graph: SimpleGraph):
        self.n = graph.n
        self.nbr = graph.neighbour_array()

    def refine(self, colours: np.ndarray) -> np.ndarray:
        cells = int(colours.max()) + 1 if self.n else 0
        while True:
            ext = np.append(colours, -1)
            rows = np.sort(ext[self.nbr], axis=1)
            sig = np.column_stack([colours, rows])
            new = np.unique(sig, axis=0, return_inverse=True)[1].reshape(-1)
            k = int(new.max()) + 1
            colours = new
            if k == cells:
                return colours
            cells = k

    def individualize(self, colours: np.ndarray, v: int) -> np.ndarray:
        c = colours * 2
        c[v] += 1
        return self.refine(_rank(c))


def _target_cell(colours: np.ndarray) -> int | None:
    counts = np.bincount(colours)
    big = np.flatnonzero(counts > 1)
    return int(big[0]) if len(big) else None


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _vertex_orbits(n: int, gens: list[tuple[int, ...]]) -> _UnionFind:
    uf = _UnionFind(n)
    for g in gens:
        for v in range(n):
            uf.union(v, g[v])
    return uf


@dataclass
class GraphGroup:
    graph: SimpleGraph
    group: GeneratedGroup
    base: list[int] = field(default_factory=list)
    orbit_sizes: list[int] = field(default_factory=list)
    nodes: int = 0

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def order_from_search(self) -> int:
        return prod(self.orbit_sizes)


class _Search:
    def __init__(self, graph: SimpleGraph, colours: np.ndarray):
        self.graph = graph
        self.ref = Refiner(graph)
        self.nodes = 0
        self.path: list[tuple[np.ndarray, int, int]] = []
        cur = self.ref.refine(_rank(colours))
        while True:
            c = _target_cell(cur)
            if c is None:
                break
            v = int(np.flatnonzero(cur == c)[0])
            self.path.append((cur, c, v))
            cur = self.ref.individualize(cur, v)
            self.nodes += 1
        self.leaf = cur
        self.counts = [np.bincount(p[0]) for p in self.path] + [np.bincount(cur)]

    def _leaf_map(self, colours: np.ndarray) -> tuple[int, ...] | None:
        inv = np.empty(len(colours), dtype=np.int64)
        inv[colours] = np.arange(len(colours))
        images = tuple(int(x) for x in inv[self.leaf])
        return images if self.graph.is_automorphism(images) else None

    def _dfs(self, colours: np.ndarray, depth: int) -> tuple[int, ...] | None:
        if depth == len(self.path):
            return self._leaf_map(colours)
        c = self.path[depth][1]
        for x in np.flatnonzero(colours == c):
            nxt = self.ref.individualize(colours, int(x))
            self.nodes += 1
            if np.array_equal(np.bincount(nxt), self.counts[depth + 1]):
                found = self._dfs(nxt, depth + 1)
                if found is not None:
                    return found
        return None

    def run(self) -> tuple[list[tuple[int, ...]], list[int], list[int]]:
        n = self.graph.n
        gens: list[tuple[int, ...]] = []
        sizes = [0] * len(self.path)
        for i in range(len(self.path) - 1, -1, -1):
            cur, c, v = self.path[i]
            uf = _vertex_orbits(n, gens)
            failed: set[int] = set()
            for w in np.flatnonzero(cur == c):
                w = int(w)
                rw = uf.find(w)
                if rw == uf.find(v) or rw in {uf.find(f) for f in failed}:
                    continue
                nxt = self.ref.individualize(cur, w)
                self.nodes += 1
                found = None
                if np.array_equal(np.bincount(nxt), self.counts[i + 1]):
                    found = self._dfs(nxt, i + 1)
                if found is None:
                    failed.add(w)
                else:
                    gens.append(found)
                    uf = _vertex_orbits(n, gens)
            sizes[i] = sum(1 for w in range(n) if uf.find(w) == uf.find(v))
        return gens, [p[2] for p in self.path], sizes


def automorphism_group(graph: SimpleGraph, colours=None, vertex_cap: int = DEFAULT_VERTEX_CAP) -> GraphGroup:
    """Generators and order of Aut(graph), or of the colour-preserving
    subgroup when an initial vertex colouring is given.

    The order is computed twice: as the product of the base orbit lengths
    found by the search, and by a stabilizer chain on the generators.
    """
    if graph.n > vertex_cap:
        raise GraphTooLarge(f"{graph.n} vertices exceeds the cap of {vertex_cap}")
    n = graph.n
    start = np.zeros(n, dtype=np.int64) if colours is None else np.asarray(colours, dtype=np.int64)
    if n == 0:
        return GraphGroup(graph, GeneratedGroup(0, []))
    search = _Search(graph, start)
    gens, base, sizes = search.run()
    grp = GeneratedGroup(n, [Permutation._raw(g) for g in gens], name=f"Aut({graph.name})" if graph.name else None)
    out = GraphGroup(graph, grp, base, sizes, search.nodes)
    if out.order_from_search != grp.order:
        raise RuntimeError(f"automorphism search order {out.order_from_search} != chain order {grp.order}")
    return out


def are_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    """Isomorphism of connected graphs via the automorphisms of a ⊔ b."""
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    if a.n == 0:
        return True
    if not (a.is_connected() and b.is_connected()):
        raise ValueError("isomorphism test expects connected graphs")
    u = a.disjoint_union(b)
    grp = automorphism_group(u).group
    return any(x >= a.n for x in grp.orbit(0))


def induced_action(grp: GeneratedGroup, points: list[int]) -> GeneratedGroup:
    """The action of ``grp`` (which must preserve ``points`` setwise) on ``points``, relabelled 0..k-1."""
    pos = {p: i for i, p in enumerate(points)}
    gens = []
    for g in grp.generators:
        try:
            gens.append(Permutation([pos[g(p)] for p in points]))
        except KeyError:
            raise ValueError("group does not preserve the point set") from None
    return GeneratedGroup(len(points), gens)
