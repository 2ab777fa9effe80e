"""One test per acceptance criterion; each records a single pass/fail line."""

from __future__ import annotations

import itertools
import time
from contextlib import contextmanager

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE_LINES
from semisym.amalgam_lab import (
    TYPE_LABELS,
    catalog_amalgam,
    classify_type,
    is_sylow_completion,
    locate_type,
    subamalgam,
    verify_goldschmidt,
)
from semisym.amalgam_lab.catalog import SAMPLE_COMPLETIONS
from semisym.census import check_g51_facts
from semisym.coset_graph import build, is_semiregular, max_regular_normal, quotient
from semisym.graph_aut import SimpleGraph, Symmetry, automorphism_group, classify_symmetry, is_biprimitive
from semisym.group_forge import named_group
from semisym.perm_core import GeneratedGroup, Permutation, eta_count, structure_probe


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the block, check the runtime limit and record one summary line."""
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit:
            detail = f"runtime {elapsed:.1f}s exceeds {limit:.0f}s"
            raise AssertionError(detail)
        status = "PASS"
    except AssertionError as exc:
        detail = detail or str(exc).splitlines()[0]
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number}: {status} {title} ({elapsed:.1f}s / limit {limit:.0f}s)"
        if detail:
            line += f" [{detail}]"
        print(line)
        ACCEPTANCE_LINES.append(line)


def aut_of(cg):
    graph = cg.graph
    aut = automorphism_group(graph)
    return graph, aut, classify_symmetry(graph, aut)


def test_criterion_01_amalgam_catalog():
    with criterion(1, "all 15 amalgams construct, verify and classify", 60):
        for label in TYPE_LABELS:
            a = locate_type(named_group(SAMPLE_COMPLETIONS[label]), label)
            rep = verify_goldschmidt(a)
            assert rep.passed, f"{label}: {rep.failures()}"
            assert classify_type(a)[0] == label
            assert 128 % a.g12.order == 0, f"{label}: |G12| = {a.g12.order}"
            assert all(eta_count(h).eta <= 2 for h in (a.g1, a.g2)), label


def test_criterion_02_gray_graph():
    with criterion(2, "Gray graph from G2^4 in Sym(3) wr Sym(3)", 5):
        a = locate_type(named_group("Sym(3)wrSym(3)"), "G2^4")
        cg = build(a)
        graph, aut, verdict = aut_of(cg)
        assert graph.n == 54 and graph.is_regular(3)
        assert verdict is Symmetry.SEMISYMMETRIC
        assert aut.order == 1296


def test_criterion_03_k33_family():
    with criterion(3, "division-2 completions give K3,3", 1):
        for name, label in (("3^2", "G1"), ("3^2:2", "G1^1"), ("3wr2", "G1^2"), ("Sym(3)xSym(3)", "G1^3")):
            cg = build(locate_type(named_group(name), label))
            graph, aut, verdict = aut_of(cg)
            assert graph.n == 6, name
            assert aut.order == 72, name
            assert verdict is Symmetry.SYMMETRIC, name


def test_criterion_04_s294():
    with criterion(4, "S294 from 7^2:(3 wr 2)", 30):
        g = named_group("7^2:(3wr2)")
        a = locate_type(g, "G1^2")
        assert is_sylow_completion(a)
        cg = build(a)
        assert cg.vertex_count == 294
        r = max_regular_normal(cg)
        assert r.order == 49 and structure_probe(r).elementary_abelian
        assert is_semiregular(cg, r)
        assert quotient(cg, r).part_sizes == (3, 3)
        graph, aut, verdict = aut_of(cg)
        assert verdict is Symmetry.SEMISYMMETRIC


def test_criterion_05_psl2_cases():
    with criterion(5, "PSL2 divisions 4, 5, 7 and the Alt(6) exemplar", 120):
        for q in (11, 13):
            g = named_group(f"PSL2({q})")
            pgl = named_group(f"PGL2({q})").order
            for label, expected in (("G1^3", Symmetry.SYMMETRIC), ("G2", Symmetry.SEMISYMMETRIC)):
                cg = build(locate_type(g, label))
                if q == 11:
                    assert cg.vertex_count == 110
                graph, aut, verdict = aut_of(cg)
                assert verdict is expected, (q, label)
                if label == "G1^3":
                    assert aut.order == pgl, (q, aut.order)
        cg = build(locate_type(named_group("PSL2(23)"), "G2^1"))
        assert cg.vertex_count == 506
        assert aut_of(cg)[2] is Symmetry.SEMISYMMETRIC
        cg = build(locate_type(named_group("Alt(6)"), "G3"))
        assert cg.vertex_count == 30
        graph, aut, verdict = aut_of(cg)
        assert verdict is Symmetry.SYMMETRIC
        # 720 is the value this criterion expects; the graph is the Tutte 8-cage and
        # the search (and networkx, in test_graph_aut) finds 1440, so this fails.
        assert aut.order == 720, f"|Aut| of the Alt(6) graph is {aut.order}, expected 720"


def test_criterion_06_alt7():
    with criterion(6, "Alt(7) G2^2 graph", 30):
        cg = build(locate_type(named_group("Alt(7)"), "G2^2"))
        assert cg.vertex_count == 210
        graph, aut, verdict = aut_of(cg)
        assert verdict is Symmetry.SEMISYMMETRIC
        assert aut.order == 5040


def test_criterion_07_psu3_g22():
    with criterion(7, "PSU3(3) G4 graph, Aut G2(2), biprimitive", 60):
        cg = build(locate_type(named_group("PSU3(3)"), "G4"))
        assert cg.vertex_count == 126
        graph, aut, verdict = aut_of(cg)
        assert verdict is Symmetry.SEMISYMMETRIC
        assert aut.order == 12096
        assert is_biprimitive(graph, aut) == (True, True)


def test_criterion_08_m12():
    with criterion(8, "M12 G5 graph and the G5^1 Sylow completion", 300):
        cg = build(locate_type(named_group("M12"), "G5"))
        assert cg.vertex_count == 990
        graph, aut, verdict = aut_of(cg)
        assert verdict is Symmetry.SEMISYMMETRIC
        assert aut.order == 190080
        b = locate_type(named_group("Aut(M12)"), "G5^1")
        assert is_sylow_completion(b) and b.g12.order == 128


def test_criterion_09_g51_facts():
    with criterion(9, "G5^1 structural facts inside Aut(M12)", 120):
        rep = check_g51_facts()
        failed = [c.key for c in rep.checks if not c.passed]
        assert rep.passed, f"failed facts: {failed}"
        keys = {c.key for c in rep.checks}
        assert {"1a", "2a", "3a", "4", "5", "6", "7", "8", "9", "10", "L1", "L2", "L3"} <= keys


def _closure_size(degree: int, gens) -> int:
    ident = Permutation.identity(degree)
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _brute_aut(graph: SimpleGraph) -> int:
    edges = graph.edge_set
    return sum(1 for p in itertools.permutations(range(graph.n))
               if all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges))


@st.composite
def _small_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, edges)


def test_criterion_10_property_suites():
    with criterion(10, "property suites", 300):
        @settings(max_examples=150, deadline=None, database=None)
        @given(st.integers(2, 7).flatmap(lambda n: st.lists(st.permutations(list(range(n))), min_size=1,
                                                             max_size=3)))
        def order_vs_enumeration(images):
            gens = [Permutation(x) for x in images]
            g = GeneratedGroup(gens[0].degree, gens)
            assert g.order <= 10_000
            assert g.order == _closure_size(gens[0].degree, gens)

        @settings(max_examples=60, deadline=None, database=None)
        @given(_small_graphs())
        def aut_vs_brute_force(graph):
            assert automorphism_group(graph).order == _brute_aut(graph)

        order_vs_enumeration()
        aut_vs_brute_force()
        for name in ("PSL2(7)", "PSL2(11)", "Alt(6)", "Sym(3)wrSym(3)", "PSU3(3)"):
            g = named_group(name)
            assert g.order == _closure_size(g.degree, g.generators), name
        # the 10-vertex bound is met by the Petersen graph
        from semisym.graph_aut import petersen_graph
        assert automorphism_group(petersen_graph()).order == _brute_aut(petersen_graph())

        for label in TYPE_LABELS:
            a = catalog_amalgam(label)
            assert classify_type(a.swapped())[0] == label, f"orientation: {label}"
            sub = subamalgam(a)
            again = subamalgam(sub)
            assert (again.g1.order, again.g2.order, again.parent.order) == \
                (sub.g1.order, sub.g2.order, sub.parent.order), f"idempotence: {label}"
            cg = build(a)
            assert len(cg.edges) == a.parent.order // a.g12.order, f"edges: {label}"
            assert all(n % 2 == 1 for n in cg.part_sizes) == is_sylow_completion(a), f"Sylow: {label}"
