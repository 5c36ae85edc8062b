import json
from pathlib import Path

from click.testing import CliRunner

from wsf4.cli import main

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_hilbert_straight():
    r = run("hilbert", "--mu", "0,0,0,0", "--u", "1", "--terms", "3")
    assert r.exit_code == 0
    assert "1 - 27*t^2 + 78*t^3" in r.output
    assert "[1, 26, 324]" in r.output


def test_hilbert_u2_json():
    r = run("hilbert", "--mu", "0,0,0,0", "--u", "2", "--terms", "5", "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["coefficients"] == [1, 0, 26, 0, 324]


def test_hilbert_rejects_zero_weight():
    r = run("hilbert", "--mu", "1,0,0,0", "--u", "1")
    assert r.exit_code == 2
    assert "not positive" in r.output


def test_weights_command():
    r = run("weights", "--mu", "0,0,0,0", "--u", "2", "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["weights"] == [2] * 26
    assert doc["wellformed_gcd"] is False


def test_build_f4st():
    r = run("build", str(CONFIGS / "f4st.toml"), "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["canonical_weight"] == 1
    assert doc["degree"] == "78"


def test_build_nwf():
    r = run("build", str(CONFIGS / "nwf.toml"), "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert sorted(doc["weights"], reverse=True) == [2] * 11 + [1] * 3
    assert doc["canonical_weight"] == 5
    assert doc["degree"] == "39"
    assert doc["orbifold"] == {
        "count": 78,
        "type": [2, [1, 1, 1]],
        "isolated": True,
        "terminal": True,
    }


def test_build_ladder_k6():
    r = run("build", str(CONFIGS / "ladder_k6.toml"), "--format", "json")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["canonical_weight"] == 6
    assert doc["degree"] == "78"
    assert doc["orbifold"]["count"] == 0


def test_search_base_candidates():
    args = (
        "search",
        "--mu-bound", "0",
        "--u-max", "2",
        "--canonical-min", "-22",
        "--canonical-max", "-11",
    )
    r = run(*args)
    assert r.exit_code == 0
    lines = [ln for ln in r.output.splitlines() if ln.strip()]
    assert len(lines) == 2
    # determinism: byte-identical on a re-run
    assert run(*args).output == r.output


def test_search_wellformed_filter():
    r = run(
        "search",
        "--mu-bound", "0",
        "--u-max", "2",
        "--canonical-min", "-22",
        "--canonical-max", "-11",
        "--wellformed",
    )
    assert r.exit_code == 0
    lines = [ln for ln in r.output.splitlines() if ln.strip()]
    assert len(lines) == 1
    assert json.loads(lines[0])["u"] == 1


def test_rep_command():
    r = run("rep", "w4")
    assert r.exit_code == 0
    assert "26" in r.output


def test_check_weyl():
    r = run("check", "weyl")
    assert r.exit_code == 0
    assert "FAIL" not in r.output


def test_check_reps():
    r = run("check", "reps")
    assert r.exit_code == 0
    assert "FAIL" not in r.output


def test_check_cross_sampled():
    r = run("check", "cross", "--samples", "2")
    assert r.exit_code == 0
    assert "FAIL" not in r.output


def test_bad_mu_syntax_is_usage_error():
    r = run("hilbert", "--mu", "0,0,0", "--u", "1")
    assert r.exit_code == 2
