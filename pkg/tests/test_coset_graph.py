from __future__ import annotations

import pytest

from semisym.amalgam_lab import Amalgam, catalog_amalgam, is_sylow_completion, locate_type
from semisym.coset_graph import (
    GraphBudgetExceeded,
    action_kernel,
    build,
    build_from_subgroups,
    is_semiregular,
    max_regular_normal,
    odd_radical,
    quotient,
    quotient_group,
    regular_normal_scan,
)
from semisym.group_forge import named_group
from semisym.perm_core import GeneratedGroup, make_subgroup, sylow_subgroup

QUICK = ["G1", "G1^1", "G1^2", "G1^3", "G2", "G2^2", "G2^3", "G3", "G3^1", "G4"]


@pytest.fixture(scope="module", params=QUICK)
def coset_graph(request):
    return build(catalog_amalgam(request.param))


def test_edge_count_is_index_of_g12(coset_graph):
    a = coset_graph.amalgam
    assert len(coset_graph.edges) == a.parent.order // a.g12.order


def test_cubic_connected_bipartite(coset_graph):
    g = coset_graph.graph
    assert g.is_regular(3) and g.is_connected()
    assert coset_graph.part_sizes == (g.parts[0], g.parts[1])


def test_odd_parts_iff_sylow_completion(coset_graph):
    odd = all(n % 2 == 1 for n in coset_graph.part_sizes)
    assert odd == is_sylow_completion(coset_graph.amalgam)


def test_completion_acts_by_automorphisms(coset_graph):
    g = coset_graph.graph
    assert all(g.is_automorphism(img) for img in coset_graph.action_images)
    assert coset_graph.action_group().order == coset_graph.amalgam.parent.order
    assert action_kernel(coset_graph).order == 1


def test_vertex_lookup(coset_graph):
    a = coset_graph.amalgam
    assert coset_graph.vertex_of(1, a.parent.identity()) == 0 or coset_graph.left[0] == tuple(range(a.parent.degree))
    x = a.parent.generators[0]
    v = coset_graph.vertex_of(1, x)
    assert 0 <= v < coset_graph.part_sizes[0]


def test_numbering_is_deterministic():
    a = catalog_amalgam("G2")
    assert build(a).edges == build(a).edges


def test_s294_quotient():
    g = named_group("7^2:(3wr2)")
    a = locate_type(g, "G1^2")
    cg = build(a)
    assert cg.vertex_count == 294
    assert odd_radical(g).order == 441  # 7^2:3^2
    r = max_regular_normal(cg)
    assert r.order == 49 and is_semiregular(cg, r)
    q = quotient(cg, r)
    assert q.part_sizes == (3, 3)
    assert quotient_group(g, r).order == 18


def test_degenerate_quotient_of_elementary_abelian_completion():
    a = catalog_amalgam("G1")
    cg = build(a)
    rep = regular_normal_scan(cg)
    assert not rep.unique and rep.subgroup.order == 3
    q = quotient(cg, rep.subgroup)
    assert q.degenerate and q.part_sizes == (1, 1)


def test_simple_completion_has_trivial_radical():
    cg = build(catalog_amalgam("G3"))
    assert max_regular_normal(cg).order == 1
    assert quotient(cg, make_subgroup(cg.parent, [])) is cg


def test_non_semiregular_subgroup_detected():
    g = named_group("7^2:(3wr2)")
    cg = build(locate_type(g, "G1^2"))
    assert not is_semiregular(cg, make_subgroup(g, g.generators))


def test_quotient_group_rejects_non_normal():
    g = named_group("Alt(6)")
    with pytest.raises(ValueError):
        quotient_group(g, sylow_subgroup(g, 3))


def test_vertex_cap():
    with pytest.raises(GraphBudgetExceeded):
        build(catalog_amalgam("G4"), vertex_cap=50)


def test_build_from_subgroups_matches_build():
    a = catalog_amalgam("G1^3")
    cg = build_from_subgroups(a.parent, a.g1, a.g2, a.g12)
    assert cg.edges == build(a).edges and isinstance(cg.amalgam, Amalgam)
    dot = cg.to_dot()
    assert dot.count("--") == len(cg.edges)
    assert cg.to_dict()["parts"] == [55, 55]
