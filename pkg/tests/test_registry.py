from __future__ import annotations

import pytest
from sympy import Rational

from orbifano.errors import InputError, SchemaError
from orbifano.formats import json_format
from orbifano.formats.base import FormatError
from orbifano.io.registry import (
    FAMILY_COUNT,
    POLYGON_COUNT,
    load_identities,
    load_registry,
    registry_from_dict,
)
from orbifano.io.weightfile import parse_bundle_file, parse_omega, parse_weight_file, parse_weight_text
from orbifano.schemas.registry import format_rational, parse_rational


def test_embedded_registry(registry):
    assert len(registry.families) == FAMILY_COUNT == 29
    assert len(registry.polygons) == POLYGON_COUNT == 26
    assert len(registry.defective) == 14
    rec = registry.family("X_{4,7/3}")
    assert (rec.k, rec.d, rec.h0, rec.r) == (4, Rational(7, 3), 2, 9)
    assert registry.polygon(26).deforms_to == "S_{1,25/3}"
    assert registry.by_invariants()[(1, Rational(25, 3))][0].name == "S_{1,25/3}"


def test_unknown_lookups_raise_key_error(registry):
    with pytest.raises(KeyError):
        registry.family("X_{9,1}")
    with pytest.raises(KeyError):
        registry.polygon(99)


def test_registry_document_round_trip(registry_dict):
    reg = registry_from_dict(registry_dict)
    assert [f.name for f in reg.families][:3] == ["S_{1,25/3}", "B_{1,16/3}", "B_{2,8/3}"]


def test_schema_error_names_record_and_field(registry_dict):
    registry_dict["families"][0]["k"] = "one"
    with pytest.raises(SchemaError) as info:
        registry_from_dict(registry_dict)
    assert info.value.record == "S_{1,25/3}"
    assert info.value.field == "k"


def test_missing_family_is_reported(registry_dict):
    registry_dict["families"].pop()
    with pytest.raises(SchemaError, match="expected 29 families"):
        registry_from_dict(registry_dict)


def test_duplicate_polygon_id(registry_dict):
    registry_dict["polygons"][1]["id"] = registry_dict["polygons"][0]["id"]
    with pytest.raises(SchemaError) as info:
        registry_from_dict(registry_dict)
    assert info.value.field == "id"


def test_name_must_match_series_and_degree(registry_dict):
    registry_dict["families"][0]["name"] = "S_{1,22/3}"
    with pytest.raises(SchemaError) as info:
        registry_from_dict(registry_dict)
    assert info.value.field in ("name", "deforms_to")


def test_registry_from_non_object():
    with pytest.raises(SchemaError):
        registry_from_dict([])


def test_load_registry_from_bad_files(tmp_path):
    with pytest.raises(SchemaError):
        load_registry(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_registry(broken)


def test_load_registry_from_file(tmp_path, registry_dict):
    path = tmp_path / "registry.json"
    path.write_text(json_format.dumps(registry_dict), encoding="utf-8")
    assert len(load_registry(path).families) == 29


def test_identities_load():
    ids = load_identities()
    assert ids.pfaffian.family == "X_{5,5/3}"
    assert len(ids.pfaffian.equations) == 5
    assert ids.octahedral.family == "X_{5,2/3}"


def test_json_helpers():
    text = json_format.dumps({"d": Rational(1, 3), "n": Rational(4), "t": (1, 2)})
    assert json_format.loads(text) == {"d": "1/3", "n": 4, "t": [1, 2]}
    with pytest.raises(FormatError):
        json_format.loads("{")


def test_json_validation(registry_dict):
    assert json_format.validate(registry_dict).valid
    result = json_format.validate({"families": []})
    assert not result.valid
    assert result.errors


def test_loader_and_validate_report_the_same_schema_violation(registry_dict):
    registry_dict["families"][0]["k"] = "one"
    result = json_format.validate(registry_dict)
    assert result.errors == ["families/0/k: 'one' is not of type 'integer'"]
    with pytest.raises(SchemaError) as info:
        registry_from_dict(registry_dict)
    assert str(info.value) == "S_{1,25/3}.k: 'one' is not of type 'integer'"


def test_rational_text():
    assert parse_rational("7/3") == Rational(7, 3)
    assert parse_rational("4") == 4
    assert format_rational(Rational(4)) == "4"
    assert format_rational(Rational(-2, 3)) == "-2/3"


def test_weight_file(weights_file):
    wf = parse_weight_file(weights_file)
    assert wf.weights.rows == ((1, 1, 2, 1, 0, 0), (0, 0, 1, 2, 1, 1))
    assert wf.bundles == [(2, 2), (2, 2)]


def test_weight_text_with_labels():
    wf = parse_weight_text("labels x0 x1 y\n1 3\n1 1 3\n")
    assert wf.weights.labels == ("x0", "x1", "y")
    assert wf.bundles == []


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2 3\n1 1 1\n",
        "1 3\n1 1 a\n",
        "0 3\n\n",
    ],
)
def test_weight_text_errors(text):
    with pytest.raises(InputError):
        parse_weight_text(text)


def test_bundle_file(tmp_path):
    path = tmp_path / "bundles.txt"
    path.write_text("2 2\n2 3\n2 1\n", encoding="utf-8")
    assert parse_bundle_file(path, 2) == [(2, 2), (3, 1)]
    with pytest.raises(InputError):
        parse_bundle_file(tmp_path / "missing.txt", 2)


def test_omega_parsing():
    assert parse_omega("1, 1") == (1, 1)
    with pytest.raises(InputError):
        parse_omega("a b")
