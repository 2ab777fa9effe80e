from __future__ import annotations

import json

import pytest

from semisym.amalgam_lab import (
    TYPE_LABELS,
    AmalgamFileError,
    catalog_amalgam,
    classify_type,
    dumps_amalgam,
    find_index3_overgroups,
    find_symmetrizing_element,
    is_sylow_completion,
    loads_amalgam,
    locate_amalgams,
    subamalgam,
    type_class,
    verify_goldschmidt,
)
from semisym.amalgam_lab.catalog import MEMBER_NAMES, SAMPLE_COMPLETIONS
from semisym.group_forge import named_group
from semisym.perm_core import sylow_subgroup

QUICK = ["G1", "G1^1", "G1^2", "G1^3", "G2", "G2^2", "G2^3", "G3", "G3^1", "G4"]


@pytest.fixture(scope="module", params=QUICK)
def amalgam(request):
    return catalog_amalgam(request.param)


def test_catalog_tables_cover_every_type():
    assert set(SAMPLE_COMPLETIONS) == set(TYPE_LABELS) == set(MEMBER_NAMES)


def test_verified_and_classified(amalgam):
    rep = verify_goldschmidt(amalgam)
    assert rep.passed, rep.failures()
    assert classify_type(amalgam)[0] == amalgam.type_label


def test_orientation_invariance(amalgam):
    assert classify_type(amalgam.swapped())[0] == classify_type(amalgam)[0]


def test_subamalgam_is_plain_and_idempotent(amalgam):
    sub = subamalgam(amalgam)
    assert sub.type_label == type_class(amalgam.type_label)
    assert verify_goldschmidt(sub).passed
    again = subamalgam(sub)
    assert (again.g1.order, again.g2.order, again.g12.order) == (sub.g1.order, sub.g2.order, sub.g12.order)
    assert again.parent.order == sub.parent.order


def test_json_roundtrip(amalgam):
    text = dumps_amalgam(amalgam)
    back = loads_amalgam(text)
    assert back.g1.order == amalgam.g1.order and back.g2.order == amalgam.g2.order
    assert back.g12.order == amalgam.g12.order
    assert classify_type(back)[0] == amalgam.type_label


def test_json_parent_reference(tmp_path):
    a = catalog_amalgam("G1^3")
    (tmp_path / "g.json").write_text(json.dumps({"name": "PSL2(11)", "degree": a.parent.degree,
                                                 "generators": [list(x.images) for x in a.parent.generators]}))
    (tmp_path / "a.json").write_text(dumps_amalgam(a, parent_ref="g.json"))
    from semisym.amalgam_lab import read_amalgam
    back = read_amalgam(tmp_path / "a.json")
    assert back.parent.order == 660 and classify_type(back)[0] == "G1^3"


def test_json_named_parent():
    a = catalog_amalgam("G2")
    data = json.loads(dumps_amalgam(a))
    data["parent"] = {"named": "PSL2(11)"}
    assert loads_amalgam(json.dumps(data)).g12.order == 4


@pytest.mark.parametrize("text", ["[]", '{"parent": 3}', '{"parent": {"named": "PSL2(11)"}, "elements": [], "g1": [0]}'])
def test_json_rejects_malformed(text):
    with pytest.raises((AmalgamFileError, KeyError)):
        loads_amalgam(text)


def test_json_rejects_foreign_elements():
    data = json.loads(dumps_amalgam(catalog_amalgam("G2")))
    data["parent"] = {"named": "Alt(12)"}
    data["elements"][0] = [1, 0] + list(range(2, 12))
    with pytest.raises(AmalgamFileError):
        loads_amalgam(json.dumps(data))


def test_overgroup_search_in_psl2_11():
    g = named_group("PSL2(11)")
    s = sylow_subgroup(g, 2, seed=0)
    search = find_index3_overgroups(g, s)
    assert search.complete
    assert all(h.order == 12 for h in search.subgroups)
    found = sorted(classify_type(a)[0] for a in locate_amalgams(g, s, search.subgroups))
    assert set(found) == {"G1^3", "G2"}


def test_sylow_completion_flag():
    assert is_sylow_completion(catalog_amalgam("G2"))
    assert is_sylow_completion(catalog_amalgam("G1"))


def test_symmetrizer_swaps_members_of_the_symmetric_amalgam():
    a = catalog_amalgam("G1^3")
    pgl = named_group("PGL2(11)")
    assert all(pgl.contains(x) for x in a.parent.generators)
    res = find_symmetrizing_element(a, pgl)
    assert res.status == "found"
    x = res.element
    assert all(a.g2.contains(x.inverse() * y * x) for y in a.g1.generators)


def test_symmetrizer_reports_exhaustion():
    a = catalog_amalgam("G2")
    res = find_symmetrizing_element(a, named_group("PGL2(11)"))
    assert res.status == "exhausted"
