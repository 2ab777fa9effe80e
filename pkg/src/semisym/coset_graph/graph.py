"""Coset graphs of amalgams, their quotients and regular normal subgroups.

A vertex is a right coset G_i h, stored by its canonical representative:
the element of G_i h whose image tuple is lexicographically least. Cosets
are enumerated by an orbit algorithm under right multiplication by the
generators of the completion, and within each part vertices are numbered
in the order of their representatives, so the numbering does not depend on
the order of discovery.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..amalgam_lab import Amalgam
from ..graph_aut.graph import SimpleGraph
from ..perm_core import GeneratedGroup, Permutation, Subgroup, core_in, intersect, join, make_subgroup

DEFAULT_VERTEX_CAP = 100_000


class GraphBudgetExceeded(RuntimeError):
    """Coset enumeration would exceed the vertex cap."""


def _dtype(n: int):
    return np.uint8 if n <= 256 else np.uint16


class _CosetSpace:
    """Right cosets of a subgroup H, with canonical representatives."""

    def __init__(self, h: GeneratedGroup, degree: int):
        self.elements = np.array([x.images for x in h.elements()], dtype=_dtype(degree)).reshape(-1, degree)
        if len(self.elements) == 0:
            self.elements = np.arange(degree, dtype=_dtype(degree)).reshape(1, degree)

    def canonical(self, g: np.ndarray) -> np.ndarray:
        """Least element of H g; (x g)[i] = g[x[i]]."""
        rows = g[self.elements]
        return rows[np.lexsort(rows.T[::-1])[0]]

    def enumerate(self, generators: list[np.ndarray], cap: int) -> list[np.ndarray]:
        start = self.canonical(np.arange(self.elements.shape[1], dtype=self.elements.dtype))
        seen = {start.tobytes(): start}
        queue = [start]
        for rep in queue:
            for s in generators:
                img = self.canonical(s[rep])
                key = img.tobytes()
                if key not in seen:
                    seen[key] = img
                    queue.append(img)
                    if len(seen) > cap:
                        raise GraphBudgetExceeded(f"more than {cap} cosets")
        return [seen[k] for k in sorted(seen, key=lambda k: tuple(seen[k]))]


def _right_transversal(h: GeneratedGroup, k: GeneratedGroup) -> list[Permutation]:
    """Representatives t of the right cosets K t of K in H."""
    reps: list[Permutation] = []
    for x in sorted(h.elements()):
        if not any(k.contains(x * t.inverse()) for t in reps):
            reps.append(x)
        if len(reps) * k.order == h.order:
            break
    return reps


@dataclass
class CosetGraph:
    amalgam: Amalgam
    left: list[tuple[int, ...]]
    right: list[tuple[int, ...]]
    edges: list[tuple[int, int]]
    action_images: list[tuple[int, ...]]
    degenerate: bool = False
    _index: dict = field(default_factory=dict, repr=False)
    _spaces: tuple = field(default=(), repr=False)

    @property
    def parent(self) -> GeneratedGroup:
        return self.amalgam.parent

    @property
    def part_sizes(self) -> tuple[int, int]:
        return len(self.left), len(self.right)

    @property
    def vertex_count(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def graph(self) -> SimpleGraph:
        name = self.amalgam.name or None
        return SimpleGraph.from_edges(self.vertex_count, self.edges, self.part_sizes, name)

    def vertex_of(self, part: int, g: Permutation) -> int:
        """Index of the vertex G_part g."""
        space = self._spaces[part - 1]
        rep = space.canonical(np.asarray(g.images, dtype=space.elements.dtype))
        return self._index[(part, rep.tobytes())]

    def vertex_action(self, g: Permutation) -> tuple[int, ...]:
        """The permutation of the vertices induced by right multiplication by g."""
        gi = np.asarray(g.images, dtype=np.intp)
        out = []
        for part, reps in ((1, self.left), (2, self.right)):
            space = self._spaces[part - 1]
            for rep in reps:
                img = space.canonical(gi[np.asarray(rep, dtype=np.intp)].astype(space.elements.dtype))
                out.append(self._index[(part, img.tobytes())])
        return tuple(out)

    def action_group(self) -> GeneratedGroup:
        """Image of the completion in Sym(vertices)."""
        return GeneratedGroup(self.vertex_count, [Permutation._raw(x) for x in self.action_images])

    def to_dict(self) -> dict:
        return {"parts": list(self.part_sizes), "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        return self.graph.to_dot()


def build_from_subgroups(parent: GeneratedGroup, h1: GeneratedGroup, h2: GeneratedGroup, h12: GeneratedGroup,
                         vertex_cap: int = DEFAULT_VERTEX_CAP, amalgam: Amalgam | None = None) -> CosetGraph:
    """Coset graph of (h1, h2, h12) in ``parent``; h12 must lie in h1 ∩ h2.

    G_1 h meets exactly the cosets G_2 t h with t running over a right
    transversal of h12 in h1, which is how the edges are produced.
    """
    if amalgam is None:
        amalgam = Amalgam(parent, h1, h2, h12)
    estimate = parent.order // h1.order + parent.order // h2.order
    if estimate > vertex_cap:
        raise GraphBudgetExceeded(f"{estimate} vertices exceeds the cap of {vertex_cap}")
    n = parent.degree
    dt = _dtype(n)
    gens = [np.asarray(s.images, dtype=dt) for s in parent.generators]
    s1, s2 = _CosetSpace(h1, n), _CosetSpace(h2, n)
    left = s1.enumerate(gens, vertex_cap)
    right = s2.enumerate(gens, vertex_cap)
    index: dict = {}
    for i, rep in enumerate(left):
        index[(1, rep.tobytes())] = i
    for j, rep in enumerate(right):
        index[(2, rep.tobytes())] = len(left) + j
    trans = [np.asarray(t.images, dtype=np.intp) for t in _right_transversal(h1, h12)]
    edges = set()
    for i, rep in enumerate(left):
        r = rep.astype(np.intp)
        for t in trans:
            img = s2.canonical(r[t].astype(dt))
            edges.add((i, index[(2, img.tobytes())]))
    cg = CosetGraph(amalgam, [tuple(int(x) for x in r) for r in left], [tuple(int(x) for x in r) for r in right],
                    sorted(edges), [], False, index, (s1, s2))
    cg.action_images = [cg.vertex_action(s) for s in parent.generators]
    cg.degenerate = h1.order == parent.order or h2.order == parent.order
    return cg


def build(a: Amalgam, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CosetGraph:
    """Γ(G, A) for an amalgam A with completion G."""
    return build_from_subgroups(a.parent, a.g1, a.g2, a.g12, vertex_cap, a)


def action_kernel(cg: CosetGraph) -> Subgroup:
    """Kernel of the completion's action on the vertices.

    Computed as the largest normal subgroup of G inside G12, and checked on
    the graph: each of its generators must act trivially.
    """
    a = cg.amalgam
    k = core_in(a.g12, [a.parent])
    ident = tuple(range(cg.vertex_count))
    for x in k.generators:
        if cg.vertex_action(x) != ident:
            raise RuntimeError("kernel element moves a vertex")
    return make_subgroup(a.parent, k.generators, name="K", known_order=k.order)


def _times_r(parent: GeneratedGroup, h: GeneratedGroup, r: GeneratedGroup) -> Subgroup:
    return join(parent, h, r)


def quotient(cg: CosetGraph, r: GeneratedGroup, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CosetGraph:
    """Γ/R: the coset graph of (G1 R, G2 R, G12 R) in G.

    When G1 R or G2 R is all of G the result has one vertex on that side and
    is flagged ``degenerate``.
    """
    a = cg.amalgam
    if r.order == 1:
        return cg
    h1, h2, h12 = (_times_r(a.parent, h, r) for h in (a.g1, a.g2, a.g12))
    name = f"{a.name}/R" if a.name else None
    qa = Amalgam(a.parent, h1, h2, h12, a.type_label, name)
    return build_from_subgroups(a.parent, h1, h2, h12, vertex_cap, qa)


def is_semiregular(cg: CosetGraph, r: GeneratedGroup) -> bool:
    """R ∩ G1 = R ∩ G2 = 1, cross-checked by the R-orbit lengths on vertices."""
    a = cg.amalgam
    by_group = intersect(r, a.g1).order == 1 and intersect(r, a.g2).order == 1
    if r.order == 1:
        by_graph = True
    else:
        img = GeneratedGroup(cg.vertex_count, [Permutation._raw(cg.vertex_action(x)) for x in r.generators])
        by_graph = img.order == r.order and all(len(o) == r.order for o in img.orbits())
    if by_group != by_graph:
        raise RuntimeError("semiregularity tests disagree")
    return by_group


def quotient_group(g: GeneratedGroup, r: GeneratedGroup, cap: int = DEFAULT_VERTEX_CAP) -> GeneratedGroup:
    """G/R for a normal subgroup R, as the regular action on the right cosets of R."""
    if r.order == 1:
        return g
    n = g.degree
    space = _CosetSpace(r, n)
    gens = [np.asarray(s.images, dtype=_dtype(n)) for s in g.generators]
    reps = space.enumerate(gens, cap)
    index = {rep.tobytes(): i for i, rep in enumerate(reps)}
    perms = []
    for s in gens:
        perms.append(Permutation._raw(tuple(index[space.canonical(s[rep]).tobytes()] for rep in reps)))
    out = GeneratedGroup(len(reps), perms, name=f"{g.name}/R" if g.name else None)
    if out.order * r.order != g.order:
        raise ValueError("subgroup is not normal: the coset action has the wrong order")
    return out
