from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from semisym.perm_core import (
    GeneratedGroup,
    Permutation,
    block_systems,
    center,
    centralizer,
    core_in,
    derived_subgroup,
    dumps_group,
    eta_count,
    intersect,
    is_normal,
    is_primitive,
    is_soluble,
    loads_group,
    normal_closure,
    normalizer,
    o_upper_p,
    omega1,
    p_core,
    structure_probe,
    sylow_subgroup,
)
from semisym.perm_core.io import GroupFileError


def perms(degree: int):
    return st.permutations(list(range(degree))).map(Permutation)


def closure(degree: int, gens) -> set:
    """Brute-force element set; the oracle for group order."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_right_action_composition():
    p = Permutation.from_cycles(3, (0, 1))
    q = Permutation.from_cycles(3, (1, 2))
    # apply p first, then q
    assert (p * q)(0) == q(p(0)) == 2


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@given(perms(7), perms(7))
def test_inverse_and_order(p, q):
    assert (p * p.inverse()).is_identity()
    assert (p ** p.order()).is_identity()
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert p.conj(q) == q.inverse() * p * q


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_order_matches_enumeration(gens):
    n = gens[0].degree
    g = GeneratedGroup(n, gens)
    elems = closure(n, gens)
    assert g.order == len(elems)
    assert set(g.elements()) == elems
    assert all(g.contains(x) for x in elems)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_order_matches_sympy(gens):
    g = GeneratedGroup(gens[0].degree, gens)
    oracle = PermutationGroup([SymPerm(list(x.images)) for x in gens])
    assert g.order == oracle.order()


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=2)), st.data())
def test_membership_outside(gens, data):
    n = gens[0].degree
    g = GeneratedGroup(n, gens)
    x = data.draw(perms(n))
    assert g.contains(x) == (x in closure(n, gens))


def sym(n):
    return GeneratedGroup(n, [Permutation.from_cycles(n, tuple(range(n))), Permutation.from_cycles(n, (0, 1))])


def test_symmetric_group_structure():
    s4 = sym(4)
    assert s4.order == 24
    assert derived_subgroup(s4).order == 12
    assert center(s4).order == 1
    assert p_core(s4, 2).order == 4
    assert o_upper_p(s4, 2).order == 12
    assert is_soluble(s4)
    assert not is_soluble(sym(5))


@pytest.mark.parametrize("n,p", [(4, 2), (5, 2), (6, 3), (7, 2), (8, 3)])
def test_sylow_subgroups_match_sympy(n, p):
    g = sym(n)
    s = sylow_subgroup(g, p, seed=0)
    oracle = PermutationGroup([SymPerm(list(x.images)) for x in g.generators]).sylow_subgroup(p)
    assert s.order == oracle.order()
    assert s.is_subgroup_of(g)


def test_sylow_is_seed_reproducible():
    g = sym(6)
    a, b = sylow_subgroup(g, 2, seed=3), sylow_subgroup(g, 2, seed=3)
    assert [x.images for x in a.generators] == [x.images for x in b.generators]


def test_normalizer_centralizer_and_core():
    s4 = sym(4)
    v4 = p_core(s4, 2)
    assert normalizer(s4, v4).order == 24
    c3 = s4.subgroup([Permutation.from_cycles(4, (0, 1, 2))])
    assert normalizer(s4, c3).order == 6
    assert centralizer(s4, Permutation.from_cycles(4, (0, 1))).order == 4
    stab = s4.stabilizer(3)
    assert core_in(stab, [s4]).order == 1
    assert is_normal(v4, s4)


def test_intersection_and_normal_closure():
    s5 = sym(5)
    a = s5.stabilizer(0)
    b = s5.stabilizer(1)
    assert intersect(a, b).order == 6
    assert normal_closure(s5, [Permutation.from_cycles(5, (0, 1, 2))]).order == 60


def test_eta_counts_noncentral_chief_factors():
    s4 = sym(4)
    assert eta_count(s4).eta == 1
    d8 = sylow_subgroup(s4, 2)
    assert eta_count(d8).eta == 0


def test_structure_probe_dihedral_8():
    d8 = sylow_subgroup(sym(4), 2)
    probe = structure_probe(d8)
    assert probe.order == 8 and probe.extraspecial and probe.center_order == 2
    assert omega1(d8).order == 8


def test_blocks_and_primitivity():
    # the dihedral group of a hexagon preserves pairs of opposite vertices
    d12 = GeneratedGroup(6, [Permutation.from_cycles(6, tuple(range(6))),
                             Permutation([0, 5, 4, 3, 2, 1])])
    sizes = sorted(b.block_size for b in block_systems(d12))
    assert sizes == [2, 3]
    assert not is_primitive(d12)
    assert is_primitive(sym(5))


def test_group_json_roundtrip():
    g = sym(5)
    g.name = "S5"
    text = dumps_group(g, order=g.order)
    data = json.loads(text)
    assert data["name"] == "S5" and data["degree"] == 5 and data["order"] == 120
    h = loads_group(text)
    assert h.order == 120 and h.name == "S5"


@pytest.mark.parametrize("text", ["[]", "{}", '{"degree": 3, "generators": [[0, 1]]}', "not json",
                                  '{"degree": 3, "generators": [[0, 0, 1]]}'])
def test_group_json_rejects_malformed(text):
    with pytest.raises(GroupFileError):
        loads_group(text)


def test_enumeration_oracle_on_sampled_s4_pairs():
    s4 = list(itertools.permutations(range(4)))
    for a, b in itertools.combinations(s4[::5], 2):
        gens = [Permutation(a), Permutation(b)]
        assert GeneratedGroup(4, gens).order == len(closure(4, gens))
