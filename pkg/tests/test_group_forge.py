from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from semisym.group_forge import (
    FeatureDisabled,
    affine_group,
    aut_m12,
    direct_product,
    field,
    g2_2,
    least_irreducible,
    m12,
    named_group,
    pgl2,
    psl2,
    psl2_order,
    psl3_order,
    psu3,
    psu3_order,
    wreath_product,
)
from semisym.group_forge import alt, cyclic, sym
from semisym.perm_core import center, derived_subgroup


def sympy_order(g) -> int:
    return PermutationGroup([SymPerm(list(x.images)) for x in g.generators]).order()


@pytest.mark.parametrize("p,k", [(2, 1), (3, 2), (5, 2), (2, 3), (7, 1)])
def test_field_axioms(p, k):
    F = field(p, k)
    assert F.q == p ** k
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
    assert F.multiplicative_order(F.primitive) == F.q - 1


def test_least_irreducible_is_reproducible():
    assert least_irreducible(3, 2) == least_irreducible(3, 2)
    assert len(least_irreducible(5, 2)) == 3


@given(st.sampled_from([(3, 2), (5, 2), (2, 4)]), st.data())
def test_frobenius_is_additive_and_multiplicative(pk, data):
    F = field(*pk)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_psl2_orders(q):
    g = psl2(q)
    assert g.order == psl2_order(q) == sympy_order(g)
    assert g.degree == q + 1
    assert derived_subgroup(g).order == g.order


@pytest.mark.parametrize("q", [5, 7, 11])
def test_pgl2_is_twice_psl2(q):
    assert pgl2(q).order == 2 * psl2(q).order


@pytest.mark.parametrize("name,order", [
    ("PSigmaL2(9)", 720), ("PGammaL2(9)", 1440), ("PSigmaL2(25)", 15600),
    ("PSL3(3)", 5616), ("PSL3(3).2", 11232), ("PSU3(3)", 6048), ("G2(2)", 12096),
    ("3wr2", 18), ("Sym(3)wr2", 72), ("Sym(3)wrZ3", 648), ("Sym(3)wrSym(3)", 1296),
    ("7^2:(3wr2)", 882), ("3^2:2", 18), ("Alt(7)", 2520), ("Sym(3)xZ3", 18),
])
def test_named_group_orders(name, order):
    g = named_group(name)
    assert g.order == order
    if order <= 2000:
        assert sympy_order(g) == order


def test_order_formulas():
    assert psu3_order(3) == 6048
    assert psl3_order(5) == 372000
    assert psu3(3).order == psu3_order(3)


def test_literature_groups_self_check():
    assert m12().order == 95040
    assert aut_m12().order == 190080
    assert g2_2().order == 12096


def test_products():
    assert direct_product(sym(3), cyclic(3)).order == 18
    assert wreath_product(sym(3), sym(3)).order == 6 ** 3 * 6
    assert affine_group(3, 2, []).order == 9
    assert center(direct_product(sym(3), cyclic(3))).order == 3
    assert alt(6).order == 360


def test_named_group_errors():
    with pytest.raises(FeatureDisabled):
        named_group("Aut(G2(3))")
    with pytest.raises(KeyError):
        named_group("Monster")
