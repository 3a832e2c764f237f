import csv
import json

import jsonschema
import pytest

from assortbounds import report as rpt
from assortbounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bounds_wolf(capsys):
    code, out, _ = run(capsys, "bounds", "fixture:wolf", "--space", "all")
    assert code == 0
    rep = rpt.loads(out)
    assert rep["observed"]["r"] == pytest.approx(-0.153, abs=5e-4)
    assert rep["observed"]["counts"] == {"m11": 31, "m10": 63, "m00": 17, "m": 111}
    mgs, gs = rep["bounds"]["mgs"], rep["bounds"]["gs"]
    assert (mgs["r_lower"], mgs["r_upper"]) == pytest.approx((-0.263, 0.099), abs=1e-3)
    assert (gs["r_lower"], gs["r_upper"]) == pytest.approx((-0.153, 0.009), abs=1e-3)
    assert rep["segregation"]["S"] == 0
    assert any("connected" in n for n in rep["notes"])
    assert rep["input"]["nodes"] == 16 and rep["input"]["n1"] == 9


def test_bounds_p3(capsys):
    code, out, _ = run(capsys, "bounds", "fixture:p3", "--space", "gs")
    rep = json.loads(out)
    assert code == 0
    assert rep["observed"]["r"] == pytest.approx(-1 / 3)
    assert rep["bounds"]["gs"]["r_lower"] == pytest.approx(-1 / 3)
    # closed-form upper bound 1 - 2*1/2; valid but not tight, only -1/3 is attainable
    assert rep["bounds"]["gs"]["r_upper"] == pytest.approx(0.0)
    assert rep["normalized"]["gs"] == pytest.approx(1.0)


def test_bounds_gs_without_metadata_is_usage_error(capsys):
    code, _, err = run(capsys, "bounds", "fixture:p3", "--no-metadata", "--space", "gs")
    assert code == 2 and "metadata" in err
    code, _, _ = run(capsys, "bounds", "fixture:p3", "--no-metadata", "--space", "mgs")
    assert code == 2


def test_mgs_only_with_n1(capsys):
    code, out, _ = run(capsys, "bounds", "fixture:c6", "--no-metadata", "--n1", "3",
                       "--space", "mgs")
    rep = json.loads(out)
    assert code == 0 and rep["observed"] is None
    assert rep["bounds"]["mgs"]["r_upper"] == pytest.approx(2 / 3)
    assert rep["bounds"]["mgs"]["r_lower"] == pytest.approx(-1)


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("a b\nc\n", encoding="utf-8")
    code, _, err = run(capsys, "bounds", str(bad), "--n1", "1")
    assert code == 2 and "bad.edges:2:" in err
    code, _, _ = run(capsys, "bounds", "fixture:k4", "--no-metadata", "--n1", "0", "--space", "mgs")
    assert code == 3
    g = tmp_path / "tri.edges"
    g.write_text("a b\nb c\na c\n", encoding="utf-8")
    meta = tmp_path / "tri.tsv"
    meta.write_text("a\t0\nb\t0\nc\t0\nd\t1\n", encoding="utf-8")
    code, _, err = run(capsys, "bounds", str(g), "-m", str(meta))
    assert code == 4 and "undefined" in err
    code, _, _ = run(capsys, "bounds", str(tmp_path / "missing.edges"), "--n1", "1")
    assert code == 2
    code, _, _ = run(capsys, "bounds", "fixture:nope", "--n1", "1")
    assert code == 2
    code, _, _ = run(capsys, "bounds", "fixture:k4", "--n1", "3")
    assert code == 2


def test_enumerate_wolf_with_csv(capsys, tmp_path):
    path = tmp_path / "h.csv"
    code, out, _ = run(capsys, "enumerate", "fixture:wolf", "--n1", "9", "--hist-csv", str(path))
    assert code == 0
    ex = json.loads(out)["explorations"][0]
    assert (ex["r_min_observed"], ex["r_max_observed"]) == pytest.approx((-0.16, 0.009), abs=1e-3)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["bin_left", "bin_right", "count"]
    assert len(rows) == 101
    assert sum(int(r[2]) for r in rows[1:]) == ex["sample_count"]


def test_enumerate_too_many(capsys):
    code, _, err = run(capsys, "enumerate", "fixture:wolf", "--cap", "10")
    assert code == 2 and "heuristic" in err


def test_heuristic_p3(capsys):
    code, out, _ = run(capsys, "heuristic", "fixture:p3", "--no-metadata", "--n1", "1",
                       "--objective", "min", "--seed", "7")
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == 7
    assert rep["explorations"][0]["params"]["best_r"] == pytest.approx(-1)


def test_generated_seed_is_printed(capsys):
    code, out, err = run(capsys, "heuristic", "fixture:k4", "--iters", "10", "--restarts", "1")
    seed = int(err.split("seed:")[1].split()[0])
    assert json.loads(out)["seed"] == seed


def test_permtest_k4(capsys):
    code, out, _ = run(capsys, "permtest", "fixture:k4", "--samples", "100000", "--seed", "1")
    ex = json.loads(out)["explorations"][0]
    assert code == 0 and ex["params"]["p_value"] == 1.0


def test_permtest_without_metadata(capsys):
    code, out, _ = run(capsys, "permtest", "fixture:c6", "--no-metadata", "--n1", "3",
                       "--samples", "100", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and rep["observed"] is None
    assert "p_value" not in rep["explorations"][0]["params"]


def test_rewire_and_summary(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "rewire", "fixture:c6", "--swaps", "3", "--samples", "20",
                       "--seed", "2", "--summary", "-o", str(dest))
    assert code == 0
    assert "observed r" in out and "rewiring (gs)" in out
    rep = rpt.loads(dest.read_text("utf-8"))
    assert rep["explorations"][0]["method"] == "rewiring"


def test_rewire_needs_metadata(capsys):
    code, _, _ = run(capsys, "rewire", "fixture:c6", "--no-metadata", "--n1", "3", "--seed", "1")
    assert code == 2


def test_same_seed_same_bytes(capsys):
    outs = [run(capsys, "permtest", "fixture:wolf", "--samples", "5000", "--seed", "3")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]


def test_fixture_copy(capsys, tmp_path):
    assert main(["fixture", "wolf", str(tmp_path)]) == 0
    code, out, _ = run(capsys, "bounds", str(tmp_path / "wolf.edges"), "-m", str(tmp_path / "wolf.tsv"))
    assert json.loads(out)["observed"]["counts"]["m"] == 111


def test_strict_schema_rejects_unknown_fields(capsys):
    _, out, _ = run(capsys, "bounds", "fixture:k4")
    rep = json.loads(out)
    rep["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        rpt.validate_report(rep)
    rpt.validate_report(rep, strict=False)
    rep.pop("extra")
    rep["bounds"]["mgs"]["surprise"] = True
    with pytest.raises(jsonschema.ValidationError):
        rpt.loads(json.dumps(rep))
    assert rpt.loads(json.dumps(rep), strict=False)["bounds"]["mgs"]["surprise"] is True


def test_report_round_trip(capsys):
    _, out, _ = run(capsys, "enumerate", "fixture:c6")
    assert rpt.dumps(rpt.loads(out)) == out
    assert rpt.loads(out)["schema_version"] == rpt.SCHEMA_VERSION
