from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from semisym.graph_aut import (
    GraphFormatError,
    GraphTooLarge,
    NotSymmetric,
    SimpleGraph,
    Symmetry,
    are_isomorphic,
    automorphism_group,
    classify_symmetry,
    complete_bipartite,
    cycle_graph,
    edge_orbits,
    is_arc_transitive,
    is_biprimitive,
    is_edge_transitive,
    is_vertex_transitive,
    petersen_graph,
    tutte_stabilizer_check,
)


def brute_force_aut(graph: SimpleGraph) -> int:
    edges = graph.edge_set
    return sum(1 for p in itertools.permutations(range(graph.n))
               if all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges))


def networkx_aut(graph: SimpleGraph, cap: int) -> int:
    """Automorphisms counted by VF2, stopping once more than ``cap`` are seen."""
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    count = 0
    for _ in GraphMatcher(g, g).isomorphisms_iter():
        count += 1
        if count > cap:
            break
    return count


@st.composite
def graphs(draw, max_n: int):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph.from_edges(n, chosen)


@settings(max_examples=80, deadline=None)
@given(graphs(7))
def test_aut_matches_brute_force(graph):
    aut = automorphism_group(graph)
    assert aut.order == brute_force_aut(graph)
    assert all(graph.is_automorphism(x.images) for x in aut.group.generators)


@settings(max_examples=40, deadline=None)
@given(graphs(10))
def test_aut_matches_networkx(graph):
    cap = 500
    order = automorphism_group(graph).order
    oracle = networkx_aut(graph, cap)
    if oracle > cap:
        assert order > cap
    else:
        assert order == oracle


@pytest.mark.parametrize("graph,order", [
    (cycle_graph(6), 12), (complete_bipartite(3, 3), 72), (petersen_graph(), 120),
    (complete_bipartite(2, 4), 48), (SimpleGraph.from_edges(4, []), 24),
])
def test_known_orders(graph, order):
    assert automorphism_group(graph).order == order


def heawood() -> SimpleGraph:
    g = nx.heawood_graph()
    return SimpleGraph.from_edges(14, list(g.edges()))


def test_heawood_and_dodecahedron():
    assert automorphism_group(heawood()).order == 336
    dod = nx.dodecahedral_graph()
    assert automorphism_group(SimpleGraph.from_edges(20, list(dod.edges()))).order == 120


def test_symmetry_verdicts():
    assert classify_symmetry(complete_bipartite(3, 3)) is Symmetry.SYMMETRIC
    assert classify_symmetry(petersen_graph()) is Symmetry.SYMMETRIC
    prism = nx.circular_ladder_graph(4)  # the cube: symmetric
    assert classify_symmetry(SimpleGraph.from_edges(8, list(prism.edges()))) is Symmetry.SYMMETRIC
    hex_prism = SimpleGraph.from_edges(12, list(nx.circular_ladder_graph(6).edges()))
    assert classify_symmetry(hex_prism) is Symmetry.NEITHER


def test_transitivity_predicates():
    k33 = complete_bipartite(3, 3)
    grp = automorphism_group(k33).group
    assert is_vertex_transitive(k33, grp) and is_edge_transitive(k33, grp) and is_arc_transitive(k33, grp)
    assert len(edge_orbits(k33, grp)) == 1
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    pgrp = automorphism_group(path).group
    assert is_edge_transitive(path, pgrp) and not is_vertex_transitive(path, pgrp)


def test_classify_symmetry_rejects_non_cubic():
    with pytest.raises(ValueError):
        classify_symmetry(cycle_graph(5))


def test_tutte_check():
    rep = tutte_stabilizer_check(petersen_graph())
    assert rep.stabilizer_order == 12 and rep.type_name == "Sym(3)x2" and rep.divides_48
    assert tutte_stabilizer_check(heawood()).type_name == "Sym(4)"
    hex_prism = SimpleGraph.from_edges(12, list(nx.circular_ladder_graph(6).edges()))
    with pytest.raises(NotSymmetric):
        tutte_stabilizer_check(hex_prism)


def test_biprimitive():
    assert is_biprimitive(complete_bipartite(3, 3)) == (True, True)
    # the part stabilizer of C8 is dihedral on 4 points, which keeps opposite pairs together
    assert is_biprimitive(cycle_graph(8)) == (False, False)


def test_isomorphism():
    c6 = cycle_graph(6)
    shuffled = SimpleGraph.from_edges(6, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)])
    assert are_isomorphic(c6, shuffled)
    prism = SimpleGraph.from_edges(6, list(nx.circular_ladder_graph(3).edges()))
    assert not are_isomorphic(complete_bipartite(3, 3), prism)
    with pytest.raises(ValueError):
        are_isomorphic(c6, SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_vertex_cap():
    with pytest.raises(GraphTooLarge):
        automorphism_group(cycle_graph(30), vertex_cap=10)


def test_graph_json_and_dot():
    g = complete_bipartite(2, 3)
    back = SimpleGraph.loads(g.dumps())
    assert back.edge_set == g.edge_set and back.parts == g.parts
    dot = g.to_dot()
    assert dot.startswith("graph") and "red" in dot and "blue" in dot


@pytest.mark.parametrize("text", ["[]", '{"edges": [[0, 0]], "n": 2}', '{"edges": [[0, 5]], "n": 2}',
                                  '{"parts": [1, 1], "edges": [[0, 0]]}', "{"])
def test_graph_json_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        SimpleGraph.loads(text)


def test_tutte_eight_cage_from_alt6_matches_networkx():
    # independent oracle for the Alt(6) coset graph: VF2 counts 1440 automorphisms
    from semisym.amalgam_lab import catalog_amalgam
    from semisym.coset_graph import build

    cg = build(catalog_amalgam("G3"))
    cage = nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5)
    g = nx.Graph(cg.edges)
    assert nx.is_isomorphic(g, cage)
    vf2 = sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())
    assert automorphism_group(cg.graph).order == vf2 == 1440
