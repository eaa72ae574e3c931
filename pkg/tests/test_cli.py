"""Command-line behavior: output contracts, exit codes, config precedence."""

import json

import pytest

from hsumset.cli import main, parse_target


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# compute


def test_compute_interval_rendering(capsys):
    code, out, _ = run(capsys, "compute", "--set", "0,1,2,3,4", "--h", "2")
    assert code == 0
    assert out == "1..7 (7)\n"


def test_compute_h_zero_and_empty(capsys):
    code, out, _ = run(capsys, "compute", "--set", "0,1,3", "--h", "0")
    assert (code, out) == (0, "{0} (1)\n")
    code, out, _ = run(capsys, "compute", "--set", "0,1,3", "--h", "5")
    assert (code, out) == (0, "{} (0)\n")


def test_compute_duplicate_note_and_json(capsys):
    code, out, err = run(capsys, "compute", "--set", "5,5,2", "--h", "1", "--format", "json")
    assert code == 0
    assert "duplicate" in err
    data = json.loads(out)
    assert data == {"set": "2,5", "h": 1, "sumset": "2,5", "cardinality": 2}


def test_compute_parse_failure_exit_2(capsys):
    code, _, err = run(capsys, "compute", "--set", "0,1,x", "--h", "2")
    assert code == 2
    assert "cannot parse" in err


def test_compute_resource_guard_exit_3(capsys):
    code, _, err = run(
        capsys, "compute", "--set", "0,1048576", "--h", "2", "--bitwindow-cap", "1000"
    )
    assert code == 3
    assert "resource guard" in err


def test_compute_with_repeats(capsys):
    code, out, _ = run(capsys, "compute", "--set", "0,1", "--h", "3", "--repeats")
    assert (code, out) == (0, "0..3 (4)\n")


def test_compute_naive_oracle_and_cap(capsys, monkeypatch):
    code, out, _ = run(capsys, "compute", "--set", "0,1,2,3,4", "--h", "2", "--naive")
    assert (code, out) == (0, "1..7 (7)\n")
    code, _, err = run(
        capsys, "compute", "--set", ",".join(map(str, range(30))), "--h", "15",
        "--naive", "--naive-cap", "1000",
    )
    assert code == 3
    assert "resource guard" in err
    monkeypatch.setenv("HSUMSET_NAIVE_CAP", "1000")
    code, _, err = run(
        capsys, "compute", "--set", ",".join(map(str, range(30))), "--h", "15", "--naive"
    )
    assert code == 3


# ---------------------------------------------------------------------------
# classify / verify


def test_parse_target_forms():
    assert parse_target("23", 3, 10) == 23
    assert parse_target("hk-h2+2", 3, 10) == 23
    assert parse_target("hk-h2", 3, 10) == 21
    assert parse_target("hk-h2-1", 3, 10) == 20
    with pytest.raises(ValueError):
        parse_target("hk+h2", 3, 10)


def test_classify_malformed_target_exit_2(capsys):
    code, _, err = run(
        capsys, "classify", "--h", "3", "--k", "10", "--target", "bogus+1", "--dmax", "14"
    )
    assert code == 2
    assert "target" in err


def test_classify_plain_lists_sets(capsys):
    code, out, _ = run(
        capsys, "classify", "--h", "3", "--k", "10", "--target", "hk-h2+2", "--dmax", "14"
    )
    assert code == 0
    assert "0,2,3,4,5,6,7,8,9,10" in out
    assert "found (2)" in out


def test_verify_exact_match_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "one-element", "--h", "3", "--k", "10")
    assert code == 0
    assert "exact-match" in out


def test_verify_fixed_h_theorem_defaults_h(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "two-element-h3", "--k", "12")
    assert code == 0
    assert "exact-match" in out


def test_verify_hypothesis_violation_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "one-element", "--h", "3", "--k", "9")
    assert code == 2
    assert "3h+1" in err


def test_verify_unknown_theorem_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "wat", "--k", "12")
    assert code == 2
    assert "unknown" in err


def test_verify_containment(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "containment", "--h", "3", "--k", "10", "--c", "2",
        "--dmax", "14",
    )
    assert code == 0
    assert "no-violators" in out


def test_verify_mismatch_exit_1(capsys):
    # an over-wide window cannot add sets, but a too-small one can lose them;
    # force a mismatch by shrinking dmax below the asserted interval end
    code, out, _ = run(
        capsys, "verify", "--theorem", "one-element", "--h", "3", "--k", "10", "--dmax", "9"
    )
    assert code == 1
    assert "missing" in out


# ---------------------------------------------------------------------------
# catalog / enumerate / dump-catalog


def test_catalog_single_family_pass(capsys):
    code, out, _ = run(capsys, "catalog", "--family", "one-deletion", "--h", "3", "--k", "10..12")
    assert code == 0
    assert out.count("pass") == 3


def test_catalog_unknown_family_exit_2(capsys):
    code, _, err = run(capsys, "catalog", "--family", "nope")
    assert code == 2
    assert "unknown family" in err


def test_catalog_subthreshold_pairs_skipped_with_notice(capsys):
    code, _, err = run(capsys, "catalog", "--family", "one-deletion", "--h", "3", "--k", "9")
    assert code == 0
    assert "below threshold" in err


def test_catalog_json_schema(capsys):
    code, out, _ = run(
        capsys, "catalog", "--family", "pair-adjacent", "--h", "3", "--k", "12",
        "--format", "json",
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert reports[0]["family"] == "pair-adjacent"
    assert reports[0]["ok"] is True
    assert reports[0]["checked"] == 11


def test_enumerate_plain(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "3", "--dmax", "3")
    assert code == 0
    assert out == "0,1,2\n0,1,3\n0,2,3\n"


def test_enumerate_gcd_filter_flag(capsys):
    _, with_filter, _ = run(capsys, "enumerate", "--k", "2", "--dmax", "4")
    _, without, _ = run(capsys, "enumerate", "--k", "2", "--dmax", "4", "--no-gcd-filter")
    assert with_filter == "0,1\n"
    assert without == "0,1\n0,2\n0,3\n0,4\n"


def test_dump_catalog_is_json_array(capsys):
    code, out, _ = run(capsys, "dump-catalog")
    assert code == 0
    entries = json.loads(out)
    assert isinstance(entries, list) and len(entries) > 150


# ---------------------------------------------------------------------------
# output handling and config precedence


def test_output_file_and_byte_stability(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for path in (out1, out2):
        code = main(
            ["verify", "--theorem", "one-element", "--h", "3", "--k", "10",
             "--format", "json", "--output", str(path)]
        )
        assert code == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert "wall_ms" not in data  # timing excluded unless requested
    assert data["verdict"] == "exact-match"


def test_timing_flag_adds_wall_ms(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "one-element", "--h", "3", "--k", "10",
        "--format", "json", "--timing",
    )
    assert code == 0
    assert "wall_ms" in json.loads(out)


def test_config_precedence(tmp_path, capsys, monkeypatch):
    from hsumset.config import load_config

    conf = tmp_path / "hsumset.conf"
    conf.write_text("threads = 2\nformat = csv\n# comment\nnaive-cap = 123\n")

    cfg = load_config({}, config_path=str(conf))
    assert (cfg.threads, cfg.format, cfg.naive_cap) == (2, "csv", 123)

    monkeypatch.setenv("HSUMSET_THREADS", "3")
    cfg = load_config({}, config_path=str(conf))
    assert cfg.threads == 3  # env over file

    cfg = load_config({"threads": 4}, config_path=str(conf))
    assert cfg.threads == 4  # flag over env

    monkeypatch.setenv("HSUMSET_THREADS", "0")
    with pytest.raises(ValueError):
        load_config({}, config_path=str(conf))


def test_config_file_errors(tmp_path):
    from hsumset.config import load_config

    bad = tmp_path / "bad.conf"
    bad.write_text("threads: 2\n")
    with pytest.raises(ValueError):
        load_config({}, config_path=str(bad))
    bad.write_text("wibble = 3\n")
    with pytest.raises(ValueError):
        load_config({}, config_path=str(bad))
