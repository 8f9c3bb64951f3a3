"""Loader and emitter tests: pointered rejection, canonical round-trips."""

import json

import pytest

from monocentre.centre import compute_centre
from monocentre.fincat import validate_category, walking_arrow
from monocentre.jsonio import (
    MalformedInput,
    category_to_doc,
    cocycle_to_doc,
    dump_canonical,
    group_to_doc,
    load_spec,
    monoidal_to_doc,
    write_spec,
)
from monocentre.monoidal import S3, Z2, chain_poset_monoidal, discrete_group_monoidal
from monocentre.veck import check_cocycle, z2_nontrivial_cocycle


def _load_doc(tmp_path, doc, name="payload.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return load_spec(str(path))


@pytest.mark.parametrize("ms_factory",
                         [lambda: discrete_group_monoidal(Z2),
                          lambda: chain_poset_monoidal(2)],
                         ids=["z2-discrete", "poset"])
def test_monoidal_round_trip_passes_the_same_certificates(tmp_path, ms_factory):
    ms = ms_factory()
    before = compute_centre(ms)
    spec = _load_doc(tmp_path, monoidal_to_doc(ms))
    assert spec.kind == "monoidal"
    after = compute_centre(spec.payload)
    assert after.all_passed and before.all_passed
    assert after.category.n_objects == before.category.n_objects
    assert [(o.a, o.gamma) for o in after.objects] \
        == [(o.a, o.gamma) for o in before.objects]


def test_category_round_trip(tmp_path):
    cat = walking_arrow()
    spec = _load_doc(tmp_path, category_to_doc(cat))
    assert spec.kind == "category"
    assert spec.payload == cat
    assert validate_category(spec.payload) == []


def test_group_and_cocycle_round_trip(tmp_path):
    spec = _load_doc(tmp_path, group_to_doc(S3))
    assert spec.kind == "group" and spec.payload == S3
    omega = z2_nontrivial_cocycle()
    spec2 = _load_doc(tmp_path, cocycle_to_doc(omega), "omega.json")
    assert spec2.kind == "cocycle" and spec2.payload == omega
    assert check_cocycle(spec2.payload) == []


def test_missing_identity_entry_is_pointered(tmp_path):
    doc = monoidal_to_doc(discrete_group_monoidal(Z2))
    doc["identity"] = [0]
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer == "/identity"


def test_unknown_compose_reference_is_pointered(tmp_path):
    doc = category_to_doc(walking_arrow())
    doc["compose"][0][2] = 99
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer == "/compose/0/2"


def test_conflicting_compose_entries_are_pointered(tmp_path):
    doc = category_to_doc(walking_arrow())
    first = list(doc["compose"][0])
    clash = [first[0], first[1], (first[2] + 1) % 3]
    doc["compose"].append(clash)
    k = len(doc["compose"]) - 1
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer == f"/compose/{k}"


def test_schema_violation_is_pointered(tmp_path):
    doc = category_to_doc(walking_arrow())
    del doc["morphisms"][0]["dst"]
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer.startswith("/morphisms/0")
    assert "dst" in str(exc.value)


def test_unknown_kind_and_version(tmp_path):
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, {"kind": "poset", "schema_version": 1})
    assert exc.value.pointer == "/kind"
    doc = group_to_doc(Z2)
    doc["schema_version"] = 7
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer == "/schema_version"


def test_parse_error_and_missing_file(tmp_path):
    path = tmp_path / "garbled.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(MalformedInput, match="not valid JSON"):
        load_spec(str(path))
    with pytest.raises(MalformedInput, match="cannot read"):
        load_spec(str(tmp_path / "absent.json"))


def test_ragged_tables_are_pointered(tmp_path):
    doc = group_to_doc(Z2)
    doc["table"][1] = [1]
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc)
    assert exc.value.pointer == "/table/1"
    doc2 = cocycle_to_doc(z2_nontrivial_cocycle())
    doc2["exponents"] = doc2["exponents"][:1]
    with pytest.raises(MalformedInput) as exc:
        _load_doc(tmp_path, doc2)
    assert exc.value.pointer == "/exponents"


def test_dump_canonical_ignores_insertion_order():
    a = {"kind": "group", "schema_version": 1, "table": [[0]]}
    b = {"table": [[0]], "schema_version": 1, "kind": "group"}
    assert dump_canonical(a) == dump_canonical(b)


def test_write_spec_round_trips(tmp_path):
    path = tmp_path / "s3.json"
    write_spec(str(path), group_to_doc(S3))
    assert load_spec(str(path)).payload == S3
