"""Transitivity predicates and the symmetric / semisymmetric verdict."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from ..group_forge import cyclic, direct_product, sym
from ..perm_core import GeneratedGroup, is_primitive, structure_probe
from .automorphisms import GraphGroup, automorphism_group, induced_action
from .graph import SimpleGraph


class Symmetry(str, Enum):
    SYMMETRIC = "Symmetric"
    SEMISYMMETRIC = "Semisymmetric"
    NEITHER = "Neither"


class NotSymmetric(ValueError):
    """The graph is not arc-transitive."""


def _check_action(graph: SimpleGraph, grp: GeneratedGroup) -> None:
    if grp.degree != graph.n:
        raise ValueError("group degree does not match the vertex count")
    for g in grp.generators:
        if not graph.is_automorphism(g.images):
            raise ValueError("group generator does not preserve adjacency")


def edge_orbits(graph: SimpleGraph, grp: GeneratedGroup) -> list[list[tuple[int, int]]]:
    _check_action(graph, grp)
    index = {e: i for i, e in enumerate(graph.edges)}
    seen = [False] * len(graph.edges)
    out = []
    for i, e in enumerate(graph.edges):
        if seen[i]:
            continue
        seen[i] = True
        orbit = [e]
        for u, v in orbit:
            for g in grp.generators:
                a, b = g(u), g(v)
                j = index[(min(a, b), max(a, b))]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(graph.edges[j])
        out.append(orbit)
    return out


def is_edge_transitive(graph: SimpleGraph, grp: GeneratedGroup) -> bool:
    return len(edge_orbits(graph, grp)) == 1


def is_vertex_transitive(graph: SimpleGraph, grp: GeneratedGroup) -> bool:
    _check_action(graph, grp)
    return grp.is_transitive()


def is_arc_transitive(graph: SimpleGraph, grp: GeneratedGroup) -> bool:
    """Vertex-transitive with the stabilizer of vertex 0 transitive on its neighbours."""
    if not is_vertex_transitive(graph, grp):
        return False
    stab = grp.stabilizer(0)
    nbrs = graph.adjacency[0]
    return len(nbrs) == 0 or set(stab.orbit(nbrs[0])) >= set(nbrs)


def classify_symmetry(graph: SimpleGraph, aut: GraphGroup | None = None) -> Symmetry:
    if not graph.is_connected():
        raise ValueError("classify_symmetry expects a connected graph")
    if not graph.is_regular(3):
        raise ValueError("classify_symmetry expects a cubic graph")
    grp = (aut or automorphism_group(graph)).group
    if is_arc_transitive(graph, grp):
        return Symmetry.SYMMETRIC
    if is_edge_transitive(graph, grp) and not is_vertex_transitive(graph, grp):
        return Symmetry.SEMISYMMETRIC
    return Symmetry.NEITHER


def part_stabilizer(graph: SimpleGraph, grp: GeneratedGroup) -> GeneratedGroup:
    """The subgroup preserving each part of a connected bipartite graph (index 1 or 2).

    Schreier generators for the transversal {1, f}, f a part-swapping generator.
    """
    parts = graph.bipartition()
    if parts is None:
        raise ValueError("graph is not bipartite")
    left = set(parts[0])

    def swaps(g) -> bool:
        return g(parts[0][0]) not in left

    flips = [g for g in grp.generators if swaps(g)]
    if not flips:
        return grp
    f = flips[0]
    fi = f.inverse()
    gens = []
    for s in grp.generators:
        if swaps(s):
            gens += [s * fi, f * s]
        else:
            gens += [s, f * s * fi]
    sub = GeneratedGroup(grp.degree, gens)
    if sub.order * 2 != grp.order:
        raise RuntimeError("part stabilizer has the wrong index")
    return sub


def is_biprimitive(graph: SimpleGraph, aut: GraphGroup | None = None) -> tuple[bool, bool]:
    """Primitivity of the part-preserving automorphisms on each part.

    With the graph's own bipartition order when it records ``parts``,
    otherwise the colour class of vertex 0 first.
    """
    parts = graph.bipartition()
    if parts is None:
        raise ValueError("graph is not bipartite")
    if graph.parts is not None:
        k = graph.parts[0]
        parts = (list(range(k)), list(range(k, graph.n)))
    grp = (aut or automorphism_group(graph)).group
    stab = part_stabilizer(graph, grp)
    out = []
    for part in parts:
        act = induced_action(stab, part)
        out.append(act.is_transitive() and is_primitive(act))
    return out[0], out[1]


@dataclass
class TutteReport:
    stabilizer_order: int
    type_name: str
    divides_48: bool


@lru_cache(maxsize=None)
def _tutte_fingerprints() -> dict:
    groups = {
        "3": cyclic(3),
        "Sym(3)": sym(3),
        "Sym(3)x2": direct_product(sym(3), cyclic(2)),
        "Sym(4)": sym(4),
        "Sym(4)x2": direct_product(sym(4), cyclic(2)),
    }
    return {_fingerprint(g): name for name, g in groups.items()}


def _fingerprint(g: GeneratedGroup) -> tuple:
    d = structure_probe(g)
    return d.order, d.abelian, d.center_order, d.order_profile


def tutte_stabilizer_check(graph: SimpleGraph, aut: GraphGroup | None = None) -> TutteReport:
    """Vertex stabilizer of a connected cubic symmetric graph is one of 3, Sym(3), Sym(3)x2, Sym(4), Sym(4)x2."""
    aut = aut or automorphism_group(graph)
    if classify_symmetry(graph, aut) is not Symmetry.SYMMETRIC:
        raise NotSymmetric("tutte_stabilizer_check expects a symmetric graph")
    stab = aut.group.stabilizer(0)
    name = _tutte_fingerprints().get(_fingerprint(stab), "unknown")
    return TutteReport(stab.order, name, 48 % stab.order == 0)
