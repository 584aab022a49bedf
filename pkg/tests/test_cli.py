import json
from importlib import resources

import jsonschema
import pytest

from dscurves.cli import main


def _run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def _schema(name):
    path = resources.files("dscurves") / "schemas" / name
    return json.loads(path.read_text())


REPORT = _schema("report.schema.json")
CANDIDATE = _schema("candidate.schema.json")


# ---------------------------------------------------------------------------
# report envelope


def test_admissible_report(capsys):
    rc, out, err = _run(capsys, "admissible", "--genus", "1")
    assert rc == 0 and err == ""
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["command"] == "admissible"
    assert rep["schema_version"] == 1
    assert rep["inputs"] == {"genus": 1}
    assert rep["outputs"]["pairs"] == [[2, 2], [2, 3], [3, 2], [4, 2]]
    assert "seed" not in rep and "timing_ms" not in rep


def test_zeta_from_counts(capsys):
    rc, out, _ = _run(
        capsys, "zeta", "from-counts", "--q", "2", "--g", "1",
        "--counts", "5", "--ds", "2",
    )
    assert rc == 0
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["outputs"]["P"] == [1, 2, 2]
    assert rep["outputs"]["ds"] is True


def test_zeta_routes_agree(capsys):
    _, out_a, _ = _run(
        capsys, "zeta", "from-places", "--q", "2", "--g", "2",
        "--places", "5,4",
    )
    _, out_b, _ = _run(
        capsys, "zeta", "from-h", "--q", "2", "--h", "2,2,1",
    )
    a = json.loads(out_a)["outputs"]
    b = json.loads(out_b)["outputs"]
    assert a == b


def test_timing_flag(capsys):
    rc, out, _ = _run(capsys, "admissible", "--genus", "2", "--timing")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["timing_ms"] >= 0
    rc, out, _ = _run(capsys, "admissible", "--genus", "2")
    assert "timing_ms" not in json.loads(out)


def test_byte_identical_reruns(capsys):
    _, a, _ = _run(capsys, "zeta", "from-counts", "--q", "3", "--g", "2",
                   "--counts", "8,14")
    _, b, _ = _run(capsys, "zeta", "from-counts", "--q", "3", "--g", "2",
                   "--counts", "8,14")
    assert a == b


# ---------------------------------------------------------------------------
# candidate streaming


def test_enumerate_streams_candidates(capsys):
    rc, out, _ = _run(capsys, "enumerate", "--q", "2", "--g", "1")
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) > 3
    for line in lines:
        cand = json.loads(line)
        jsonschema.validate(cand, CANDIDATE)
    seen = [json.loads(line)["a"] for line in lines]
    assert seen == sorted(seen)


def test_enumerate_jobs_independent(capsys):
    _, one, _ = _run(capsys, "enumerate", "--q", "2", "--g", "3")
    _, four, _ = _run(capsys, "enumerate", "--q", "2", "--g", "3",
                      "--jobs", "4")
    assert one == four


def test_enumerate_filters(capsys):
    _, out, _ = _run(capsys, "enumerate", "--q", "2", "--g", "2",
                     "--a1", "4", "--ds-m", "2")
    for line in out.strip().split("\n"):
        cand = json.loads(line)
        assert cand["a"][0] == 4


# ---------------------------------------------------------------------------
# curves and families


def test_count_command(capsys):
    rc, out, _ = _run(capsys, "count", "--curve", "hyp q=2 h=1 f=x^5+x^3",
                      "--m", "3")
    rep = json.loads(out)
    assert rep["outputs"]["counts"] == [5, 5, 17]


def test_family_command(capsys):
    rc, out, _ = _run(capsys, "family", "--name", "hermitian",
                      "--param", "2", "--m", "2")
    rep = json.loads(out)
    assert rep["outputs"]["counts"] == [9, 9]
    rc, out, _ = _run(capsys, "family", "--name", "drinfeld-dl",
                      "--param", "3")
    rep = json.loads(out)
    assert rep["outputs"]["counts"] == [4, 4]


def test_howe_commands(capsys):
    rc, out, _ = _run(capsys, "howe", "cubic", "--q", "3", "--n", "2")
    rep = json.loads(out)
    assert rep["outputs"]["counts"] == [1, 1]
    rc, out, _ = _run(capsys, "howe", "interpolation", "--q", "3")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["seed"] == 0
    assert rep["outputs"]["counts"][0] == rep["outputs"]["counts"][1]
    _, again, _ = _run(capsys, "howe", "interpolation", "--q", "3")
    assert out == again


# ---------------------------------------------------------------------------
# cyclotomic and Drinfeld subcommands


def test_carlitz_commands(capsys):
    rc, out, _ = _run(capsys, "carlitz", "phi", "--q", "2", "--M", "t")
    assert json.loads(out)["outputs"]["phi"] == "x+t"
    rc, out, _ = _run(capsys, "carlitz", "places", "--q", "2",
                      "--M", "t^4+t+1", "--dmax", "6")
    assert json.loads(out)["outputs"]["a"] == [15, 0, 0, 1, 0, 5]
    rc, out, _ = _run(capsys, "carlitz", "zeta", "--q", "2",
                      "--M", "t^4+t+1")
    rep = json.loads(out)
    assert rep["outputs"]["genus"] == 14
    assert rep["outputs"]["a"][:6] == [15, 0, 0, 1, 0, 5]


def test_drinfeld_commands(capsys):
    rc, out, _ = _run(
        capsys, "drinfeld", "phi", "--q", "2", "--n", "3", "--M", "t",
        "--u", "t*(t^2+t+1)/(t^3+t+1);t*(t+1)^2/(t^3+t+1);1",
    )
    rep = json.loads(out)
    assert rep["outputs"]["phi"] == (
        "x^7+((t^3+t)/(t^3+t+1))*x^3+((t^3+t^2+t)/(t^3+t+1))*x+t"
    )
    rc, out, _ = _run(
        capsys, "drinfeld", "rank3-check",
        "--u", "t*(t^2+t+1)/(t^3+t+1);t*(t+1)^2/(t^3+t+1);1",
    )
    rep = json.loads(out)
    assert rep["outputs"]["overall"] is True
    assert rep["outputs"]["eisenstein_u2"] is True
    rc, out, _ = _run(capsys, "drinfeld", "basechange", "--q", "2",
                      "--n", "2", "--M", "t^3+t+1")
    rep = json.loads(out)
    assert rep["outputs"]["phi"].startswith("x^63+")
    assert rep["outputs"]["routes_equal"] is True


# ---------------------------------------------------------------------------
# formats


def test_csv_and_table_formats(capsys):
    rc, out, _ = _run(capsys, "admissible", "--genus", "1",
                      "--format", "csv")
    assert rc == 0
    assert "pairs" in out
    rc, out, _ = _run(capsys, "admissible", "--genus", "1",
                      "--format", "table")
    assert rc == 0 and "2" in out


# ---------------------------------------------------------------------------
# failure modes


def test_bad_values_name_the_flag(capsys):
    rc, out, err = _run(capsys, "zeta", "from-counts", "--q", "2",
                        "--g", "1", "--counts", "1,x")
    assert rc == 2
    assert err.startswith("error:") and "--counts" in err


def test_validation_failures_exit_2(capsys):
    rc, _, err = _run(capsys, "count", "--curve", "hyp q=2 f=x^5+x^3",
                      "--m", "1")
    assert rc == 2 and "error:" in err
    rc, _, err = _run(capsys, "carlitz", "phi", "--q", "2",
                      "--M", "t^11+t^2+1")
    assert rc == 2
    rc, _, err = _run(capsys, "enumerate", "--q", "2", "--g", "9")
    assert rc == 2


def test_unknown_target_is_a_usage_error(capsys):
    with pytest.raises(SystemExit):
        main(["reproduce", "no-such-target"])


# ---------------------------------------------------------------------------
# pinned targets


def test_reproduce_pass(capsys):
    rc, out, _ = _run(capsys, "reproduce", "admissible-g1")
    assert rc == 0
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["outputs"]["ok"] is True
    assert all(row["pass"] for row in rep["outputs"]["items"])


def test_reproduce_mismatch_exits_nonzero(capsys, monkeypatch):
    from dscurves import reference

    def broken():
        return [reference.Item("forced", False, expected=1, got=2)]

    monkeypatch.setitem(reference.TARGETS, "admissible-g1", broken)
    rc, out, _ = _run(capsys, "reproduce", "admissible-g1")
    assert rc == 1
    rep = json.loads(out)
    assert rep["outputs"]["ok"] is False
    row = rep["outputs"]["items"][0]
    assert row["pass"] is False and row["expected"] == 1 and row["got"] == 2
