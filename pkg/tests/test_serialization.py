import json

import pytest

from hopfint.errors import InputError
from hopfint.hopf import verify_axioms
from hopfint.presets import sweedler
from hopfint.serialization import dump_hopf_json, hopf_from_dict, hopf_to_dict, load_hopf_json


def test_round_trip(finite_hopf):
    h = finite_hopf
    back = hopf_from_dict(json.loads(dump_hopf_json(h)))
    assert back.field == h.field
    assert back.labels == h.labels
    assert back.algebra.table == h.algebra.table
    assert back.comul == h.comul
    assert back.counit == h.counit
    assert back.antipode == h.antipode
    assert dump_hopf_json(back) == dump_hopf_json(h)


def test_file_round_trip_uses_stem_as_name(tmp_path):
    path = tmp_path / "mine.json"
    path.write_text(dump_hopf_json(sweedler()), encoding="utf-8")
    h = load_hopf_json(path)
    assert h.name == "mine"
    assert verify_axioms(h).passed


def test_field_spec_string_is_accepted():
    doc = hopf_to_dict(sweedler())
    doc["field"] = "q"
    assert hopf_from_dict(doc).field == sweedler().field


def test_basis_defaults_to_generic_labels():
    doc = hopf_to_dict(sweedler())
    del doc["basis"]
    assert hopf_from_dict(doc).labels == ["e0", "e1", "e2", "e3"]


def test_duplicate_entries_accumulate():
    doc = hopf_to_dict(sweedler())
    doc["counit"] = [[0, "1/2"], [0, "1/2"], [1, 1]]
    h = hopf_from_dict(doc)
    assert [str(c) for c in h.counit] == ["1", "1", "0", "0"]


def broken(mutate):
    doc = hopf_to_dict(sweedler())
    mutate(doc)
    return doc


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d.pop("antipode"), "$.antipode"),
    (lambda d: d.update(dim=0), "$.dim"),
    (lambda d: d.update(dim="4"), "$.dim"),
    (lambda d: d.update(field="r"), "$.field"),
    (lambda d: d.update(basis=["1", "g"]), "$.basis"),
    (lambda d: d.update(unit=["1"]), "$.unit"),
    (lambda d: d.update(mul={}), "$.mul"),
    (lambda d: d["mul"].append([0, 9, 0, "1"]), "$.mul[{}][1]"),
    (lambda d: d["mul"].append([0, 1.5, 0, "1"]), "$.mul[{}][1]"),
    (lambda d: d["comul"].append([0, 0, "1"]), "$.comul[{}]"),
    (lambda d: d["counit"].append([0, "1/0"]), "$.counit[{}][1]"),
    (lambda d: d["antipode"].append([0, 0, True]), "$.antipode[{}][2]"),
])
def test_malformed_documents_name_the_path(mutate, path):
    doc = broken(mutate)
    with pytest.raises(InputError) as info:
        hopf_from_dict(doc)
    key = path.split("[")[0].removeprefix("$.")
    expected = path.format(len(doc[key]) - 1) if "{}" in path else path
    assert info.value.path == expected


def test_non_object_document():
    with pytest.raises(InputError):
        hopf_from_dict([1, 2])


def test_unreadable_and_invalid_files(tmp_path):
    with pytest.raises(InputError):
        load_hopf_json(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(InputError, match="invalid JSON"):
        load_hopf_json(bad)
