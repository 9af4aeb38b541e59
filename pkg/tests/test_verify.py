from __future__ import annotations

import copy
import random

import pytest

from orbifano.errors import InputError
from orbifano.formats import json_format
from orbifano.io.registry import registry_from_dict
from orbifano.verify.runner import SUITES, report_json, summarize, verify_all


@pytest.fixture(scope="module")
def report():
    return verify_all()


def test_full_report_has_no_failures(report):
    assert report
    assert [e.id for e in report if e.failed] == []


def test_ids_are_unique_and_sorted(report):
    ids = [e.id for e in report]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_every_suite_contributes(report):
    prefixes = {e.id.split(".", 1)[0] for e in report}
    assert prefixes == set(SUITES)


@pytest.mark.parametrize(
    "check_id",
    [
        "tables.X_{4,7/3}.h0",
        "polygons.26.content",
        "constructions.worked-example.chart-U23",
        "constructions.worked-example.M^4",
        "constructions.worked-example.K2",
        "constructions.X_{3,5}.nef",
        "constructions.X_{3,4}.nef",
        "mmp.X_{5,5/3}.curated",
        "mmp.X_{6,2}.curated",
        "identities.pfaffian.incidence",
        "candidates.undecided",
        "candidates.not-occurring",
        "candidates.cascade.families",
        "candidates.no-toric-degeneration",
        "candidates.remark8.k2.20/3",
    ],
)
def test_named_checks_pass(report, check_id):
    by_id = {e.id: e for e in report}
    assert by_id[check_id].status == "pass"


def test_missing_table_row_is_skipped_with_citation(report):
    by_id = {e.id: e for e in report}
    e = by_id["candidates.table4.missing.k6.4"]
    assert e.status == "skipped-with-citation"
    assert e.citation


@pytest.mark.parametrize("name", ["X_{3,5}", "X_{3,4}"])
def test_printed_nef_cones_are_reported_as_errata(report, name):
    by_id = {e.id: e for e in report}
    e = by_id[f"constructions.{name}.nef-printed"]
    assert e.status == "skipped-with-citation"
    assert e.expected != e.computed


def test_every_skip_has_a_citation(report):
    for e in report:
        if e.status == "skipped-with-citation":
            assert e.citation, e.id


def test_summary_counts(report):
    counts = summarize(report)
    assert counts["fail"] == 0
    assert counts["pass"] + counts["skipped-with-citation"] == len(report)


def test_report_json_shape(report):
    rows = json_format.loads(report_json(report))
    assert len(rows) == len(report)
    assert set(rows[0]) == {"id", "citation", "status", "expected", "computed"}


def test_single_suite():
    entries = verify_all("candidates")
    assert entries
    assert all(e.id.startswith("candidates.") for e in entries)


def test_unknown_suite():
    with pytest.raises(InputError):
        verify_all("everything")


def test_perturbed_h0_fails_exactly_one_check(registry_dict):
    for rec in registry_dict["families"]:
        if rec["name"] == "X_{4,7/3}":
            rec["h0"] = 3
    entries = verify_all("all", registry_from_dict(registry_dict))
    failed = [e for e in entries if e.failed]
    assert [e.id for e in failed] == ["tables.X_{4,7/3}.h0"]
    assert failed[0].expected == 3
    assert failed[0].computed == 2


def test_perturbed_polygon_fails_its_content_check(registry_dict):
    for rec in registry_dict["polygons"]:
        if rec["id"] == 26:
            rec["n"] = 5
    entries = verify_all("polygons", registry_from_dict(registry_dict))
    assert [e.id for e in entries if e.failed] == ["polygons.26.content"]


# field -> (section, suite expected to catch it)
PERTURBED_FIELDS = {
    "h0": ("families", "tables"),
    "r": ("families", "tables"),
    "moduli": ("families", "tables"),
    "pi1": ("families", "tables"),
    "fano_index": ("families", "candidates"),
    "weights": ("families", "constructions"),
    "nef": ("families", "constructions"),
    "n": ("polygons", "polygons"),
    "k": ("polygons", "polygons"),
    "vertices": ("polygons", "polygons"),
    "deforms_to": ("polygons", "polygons"),
}


def _checked_weights(rec):
    c = rec["construction"]
    return c["kind"] == "weights" and not c.get("erratum")


def _candidates(registry_dict, field):
    section, _ = PERTURBED_FIELDS[field]
    rows = registry_dict[section]
    if field == "weights":
        # rank one, leading weight 1: the degree formula moves with the first weight
        return [
            i for i, rec in enumerate(rows)
            if _checked_weights(rec)
            and len(rec["construction"]["weights"]) == 1
            and rec["construction"]["weights"][0][0] == 1
        ]
    if field == "nef":
        return [
            i for i, rec in enumerate(rows)
            if _checked_weights(rec) and len((rec["construction"].get("nef") or [[0]])[0]) > 1
        ]
    return list(range(len(rows)))


def _perturbations(registry_dict, rounds=2, seed=7):
    rng = random.Random(seed)
    out = []
    for _ in range(rounds):
        for field, (section, suite) in PERTURBED_FIELDS.items():
            out.append((section, rng.choice(_candidates(registry_dict, field)), field, suite))
    return out


def _perturb(doc, section, i, field):
    rec = doc[section][i]
    if field in ("weights", "nef"):
        row = rec["construction"][field][0]
        # a ray on a coordinate axis moves off it, any other ray changes direction
        j = row.index(0) if sum(1 for x in row if x) == 1 else 0
        row[j] += 1
    elif field == "pi1":
        rec["pi1"] = "Z/2"
    elif field == "vertices":
        rec["vertices"][0] = [2 * x for x in rec["vertices"][0]]
    elif field == "deforms_to":
        rec["deforms_to"] = next(f["name"] for f in doc["families"] if f["k"] != rec["k"])
    else:
        rec[field] += 1


def test_random_single_field_perturbations_are_caught(registry_dict):
    cases = _perturbations(registry_dict)
    assert {field for _, _, field, _ in cases} == set(PERTURBED_FIELDS)
    for section, i, field, suite in cases:
        doc = copy.deepcopy(registry_dict)
        _perturb(doc, section, i, field)
        entries = verify_all(suite, registry_from_dict(doc))
        assert any(e.failed for e in entries), (section, i, field)


def test_perturbed_polygon_9_vertex_fails_its_content_check(registry_dict):
    for rec in registry_dict["polygons"]:
        if rec["id"] == 9:
            assert rec["vertices"][0] == [1, 1]
            rec["vertices"][0] = [2, 1]
    entries = verify_all("polygons", registry_from_dict(registry_dict))
    failed = [e for e in entries if e.failed]
    assert [e.id for e in failed] == ["polygons.09.content"]
    assert failed[0].expected == {"n": 0, "k": 6}
