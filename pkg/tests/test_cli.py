import json
from importlib import resources

import jsonschema
import pytest

from gridmatch.cli import main
from gridmatch.verify import report_from_json, run_verify, verify_cell

SCHEMA = json.loads(resources.files("gridmatch").joinpath("report_schema.json").read_text())


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("GRIDMATCH_CACHE_DIR", str(tmp_path / "cache"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_g5(capsys):
    code, out, _ = run(capsys, "compute", "G", "5")
    assert code == 0 and out.strip() == "∨_16S^4"


def test_compute_m1(capsys):
    code, out, _ = run(capsys, "compute", "M", "1")
    assert code == 0 and out.strip() == "pt"


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "G", "9", "--json")
    assert code == 0
    assert json.loads(out) == {"spheres": {"8": 165, "9": 2}, "contractible": False}


def test_compute_bad_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "Z", "3"])
    assert exc.value.code == 2


def test_table_has_ten_rows(capsys):
    code, out, _ = run(capsys, "table", "1")
    lines = [l for l in out.strip().splitlines() if l and not l.startswith("n")]
    assert code == 0 and len(lines) == 10


def test_table_2_h_row(capsys):
    code, out, _ = run(capsys, "table", "2")
    hrow = [l for l in out.splitlines() if l.startswith("H")][0]
    assert "S^1" in hrow and "∨_3S^2" in hrow


def test_betti_g3(capsys):
    code, out, _ = run(capsys, "betti", "G", "3")
    assert code == 0 and "{2: 5}" in out and "torsion_free=True" in out


def test_betti_grid_matching(capsys):
    code, out, _ = run(capsys, "betti", "grid", "1", "7", "--matching", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["betti"]["reduced_betti"] == {"1": 1}   # Ind(P_6)


def test_betti_file(tmp_path, capsys):
    p = tmp_path / "triangle.edges"
    p.write_text("a b\nb c\na c\n")
    code, out, _ = run(capsys, "betti", "file", str(p), "--json")
    assert code == 0
    assert json.loads(out)["betti"]["reduced_betti"] == {"0": 2}


def test_betti_resource_limit_exit_code(capsys):
    code, _, err = run(capsys, "betti", "G", "4", "--budget", "50", "--raw")
    assert code == 3 and "resource-limit" in err


def test_explore_2_2(capsys):
    code, out, _ = run(capsys, "explore", "2", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["betti"]["reduced_betti"] == {"0": 1}
    assert data["contiguous_band"] is True


def test_explore_1_4(capsys):
    code, out, _ = run(capsys, "explore", "1", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["betti"]["reduced_betti"] == {"0": 1}


def test_dims_g9(capsys):
    code, out, _ = run(capsys, "dims", "G", "9")
    assert code == 0 and "OK" in out and "[8, 9]" in out


def test_dims_q1_contractible(capsys):
    code, out, _ = run(capsys, "dims", "Q", "1")
    assert code == 0 and "contractible" in out


def test_reduce_trace_output(capsys):
    code, out, _ = run(capsys, "reduce", "G", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("FOLD ")


def test_iso_b1_c6(capsys):
    code, out, _ = run(capsys, "iso", "B", "1", "cycle", "6")
    assert code == 0 and "isomorphic" in out


def test_iso_negative(capsys):
    code, out, _ = run(capsys, "iso", "path", "3", "cycle", "3")
    assert code == 1 and "not isomorphic" in out


def test_verify_match_cells(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--families", "G,M", "--n-max", "2",
                       "--report", str(report), "--no-cache")
    assert code == 0
    data = json.load(open(report))
    assert len(data) == 4
    assert all(r["status"] == "match" for r in data)
    for r in data:
        jsonschema.validate(r, SCHEMA)


def test_verify_detects_o3_mismatch(tmp_path, capsys):
    # the O-family wedge split fails at n=3: brute force sees ∨_3 S^4,
    # the symbolic calculus claims ∨_4 S^4 ∨ S^5; verify must say so
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--families", "O", "--n-max", "3",
                       "--report", str(report), "--no-cache")
    assert code == 1
    data = {(r["family"], r["n"]): r for r in json.load(open(report))}
    assert data[("O", 1)]["status"] == "match"
    assert data[("O", 2)]["status"] == "match"
    assert data[("O", 3)]["status"] == "mismatch"
    assert data[("O", 3)]["betti"]["reduced_betti"] == {"4": 3}
    assert data[("O", 3)]["symbolic"]["spheres"] == {"4": 4, "5": 1}


def test_verify_budget_limits_are_reported(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--families", "G", "--n-max", "4",
                       "--budget", "100", "--report", str(report), "--no-cache")
    assert code == 3
    data = json.load(open(report))
    assert any(r["status"] == "resource-limit" for r in data)
    for r in data:
        jsonschema.validate(r, SCHEMA)


def test_verify_cache_reserves_equal_results(tmp_path):
    first = run_verify(["G"], 2, no_cache=False)
    second = run_verify(["G"], 2, no_cache=False)   # served from cache
    fresh = run_verify(["G"], 2, no_cache=True)
    def strip(rs):
        # timings differ run to run; compare everything else
        return [{k: v for k, v in r.to_json().items() if k != "timings"} for r in rs]
    assert strip(first) == strip(second) == strip(fresh)


def test_report_json_roundtrip():
    rep = verify_cell("G", 2)
    back = report_from_json(rep.to_json())
    assert back.family == "G" and back.n == 2 and back.status == "match"
    assert back.symbolic == rep.symbolic
    assert back.betti.as_dict() == rep.betti.as_dict()


def test_verify_parallel_jobs_match_serial(tmp_path):
    serial = run_verify(["D"], 3, jobs=1, no_cache=True)
    parallel = run_verify(["D"], 3, jobs=2, no_cache=True)
    assert [(r.family, r.n, r.status) for r in serial] == \
           [(r.family, r.n, r.status) for r in parallel]
