from __future__ import annotations

import pytest

from orbifano.cli import main
from orbifano.formats import json_format


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "candidates"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out


def test_verify_writes_json(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "--suite", "tables", "--json", str(path)]) == 0
    rows = json_format.loads(path.read_text(encoding="utf-8"))
    assert rows and all(r["id"].startswith("tables.") for r in rows)


def test_verify_reports_a_perturbed_registry(tmp_path, registry_dict, capsys):
    for rec in registry_dict["families"]:
        if rec["name"] == "X_{4,7/3}":
            rec["h0"] = 3
    path = tmp_path / "registry.json"
    path.write_text(json_format.dumps(registry_dict), encoding="utf-8")
    assert main(["verify", "--suite", "tables", "--registry", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL tables.X_{4,7/3}.h0" in out
    assert "1 failed" in out


def test_unreadable_registry_exits_with_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert main(["verify", "--registry", str(path)]) == 2
    assert capsys.readouterr().err.startswith("orbifano:")


def test_polygon_analyze_by_id(capsys):
    assert main(["polygon", "analyze", "--id", "26"]) == 0
    out = capsys.readouterr().out
    assert "n: 2" in out
    assert "basket: 1 × 1/3(1,1)" in out
    assert "K^2 (fan): 25/3" in out
    assert "family: S_{1,25/3}" in out


def test_polygon_analyze_without_family(capsys):
    assert main(["polygon", "analyze", "--vertices", "1,0;0,1;-1,-1"]) == 0
    out = capsys.readouterr().out
    assert "K^2 (fan): 9" in out
    assert "family: none" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["polygon", "analyze", "--id", "99"],
        ["polygon", "analyze", "--vertices", "2,0;0,1;-1,-1"],
        ["polygon", "render", "--id", "26", "--scale", "2"],
    ],
)
def test_polygon_errors_exit_with_2(argv, capsys):
    assert main(argv) == 2
    assert "orbifano:" in capsys.readouterr().err


def test_polygon_needs_a_source():
    with pytest.raises(SystemExit):
        main(["polygon", "analyze"])


def test_polygon_render_to_file(tmp_path):
    path = tmp_path / "p26.svg"
    assert main(["polygon", "render", "--id", "26", "--out", str(path), "--scale", "20"]) == 0
    text = path.read_text(encoding="utf-8")
    assert text.startswith("<?xml") and "<svg" in text


def test_toric_commands(weights_file, capsys):
    assert main(["toric", "nef", "--weights", str(weights_file)]) == 0
    assert capsys.readouterr().out.splitlines() == ["1 2", "2 1"]

    assert main(["toric", "charts", "--weights", str(weights_file)]) == 0
    assert "1/3(1,1,1,1)_{x0,x1,x4,x5}" in capsys.readouterr().out.splitlines()

    assert main(["toric", "irrelevant", "--weights", str(weights_file)]) == 0
    assert len(capsys.readouterr().out.split()) == 9

    assert main(["toric", "fan", "--weights", str(weights_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert sum(1 for ln in lines if ln.startswith("cone ")) == 9


def test_degree_command(weights_file, capsys):
    assert main(["degree", "--weights", str(weights_file)]) == 0
    assert capsys.readouterr().out.strip() == "10/3"


def test_degree_with_separate_bundle_file(weights_file, tmp_path, capsys):
    bundles = tmp_path / "bundles.txt"
    bundles.write_text("2 2\n2 2\n", encoding="utf-8")
    assert main(["degree", "--weights", str(weights_file), "--bundles", str(bundles)]) == 0
    assert capsys.readouterr().out.strip() == "10/3"


def test_degree_on_a_wall(weights_file, capsys):
    assert main(["degree", "--weights", str(weights_file), "--omega", "2 1"]) == 2
    assert "orbifano:" in capsys.readouterr().err


def test_mmp_tree(capsys):
    assert main(["mmp", "tree", "--k", "6", "--mode", "curated"]) == 0
    out = capsys.readouterr().out
    assert "=> D4" in out
    assert "=> C(C2,C2)" in out


def test_mmp_tree_json(capsys):
    assert main(["mmp", "tree", "--k", "6", "--json"]) == 0
    data = json_format.loads(capsys.readouterr().out)
    assert list(data) == ["X_{6,2}"]
    assert data["X_{6,2}"]["basket"] == "6x1/3"


def test_mmp_tree_without_roots(capsys):
    assert main(["mmp", "tree", "--k", "7"]) == 2


def test_candidates(capsys):
    assert main(["candidates"]) == 0
    out = capsys.readouterr().out
    assert "undecided" in out
    assert "excluded-by-cover" in out


def test_candidates_json(capsys):
    assert main(["candidates", "--json"]) == 0
    rows = json_format.loads(capsys.readouterr().out)
    assert sum(1 for r in rows if r["verdict"] in ("occurs", "undecided")) == 30


def test_info(capsys):
    assert main(["info", "X_{4,7/3}"]) == 0
    out = capsys.readouterr().out
    assert "X_{4,7/3}" in out


def test_info_unknown_family(capsys):
    assert main(["info", "X_{9,9}"]) == 2
