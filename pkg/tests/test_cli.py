"""Command line interface: file parsing, golden outputs, exit codes."""

import json
import pathlib

import pytest

from scrollgeom.cli import (RunConfig, UsageError, build_parser, main,
                            parse_ideal_file)

DATA = pathlib.Path(__file__).parent / "data"


def golden(name):
    return json.loads((DATA / name).read_text())


def run_json(capsys, argv):
    rc = main(["--output", "json"] + argv)
    out = capsys.readouterr().out
    return rc, json.loads(out)


def test_parse_ideal_file_roundtrip():
    I = parse_ideal_file(str(DATA / "segre.ideal"))
    assert I.ring.names == ["x%d" % i for i in range(6)]
    assert I.ring.p == 10009
    assert len(I.generators) == 3
    # reparsing hits the ring cache: same ring object both times
    J = parse_ideal_file(str(DATA / "segre.ideal"))
    assert J.ring is I.ring


def test_parse_ideal_file_errors(tmp_path):
    missing = tmp_path / "missing_header.ideal"
    missing.write_text("x0*x1 - x2^2\n")
    with pytest.raises(UsageError, match="expected header"):
        parse_ideal_file(str(missing))
    empty = tmp_path / "empty.ideal"
    empty.write_text("# only a comment\n")
    with pytest.raises(UsageError, match="missing ring header"):
        parse_ideal_file(str(empty))
    nopolys = tmp_path / "nopolys.ideal"
    nopolys.write_text("ring x0..x3 p=10009\n")
    with pytest.raises(UsageError, match="no polynomials"):
        parse_ideal_file(str(nopolys))
    badpoly = tmp_path / "badpoly.ideal"
    badpoly.write_text("ring x0..x3 p=10009\nx0 +* x1\n")
    with pytest.raises(UsageError, match="badpoly.ideal:2"):
        parse_ideal_file(str(badpoly))
    badrange = tmp_path / "badrange.ideal"
    badrange.write_text("ring x3..x5 p=10009\nx3\n")
    with pytest.raises(UsageError, match="variable range"):
        parse_ideal_file(str(badrange))
    with pytest.raises(UsageError):
        parse_ideal_file(str(tmp_path / "does_not_exist.ideal"))


def test_golden_table1(capsys):
    rc, payload = run_json(capsys, ["table", "1"])
    assert rc == 0
    assert payload == golden("table1.golden.json")


def test_golden_table3(capsys):
    rc, payload = run_json(capsys, ["table", "3"])
    assert rc == 0
    assert payload == golden("table3.golden.json")


def test_golden_scroll(capsys):
    rc, payload = run_json(capsys, ["scroll", "0,1,0,1"])
    assert rc == 0
    assert payload == golden("scroll_0101.golden.json")


def test_golden_gb(capsys):
    rc, payload = run_json(capsys, ["gb", str(DATA / "segre.ideal")])
    assert rc == 0
    assert payload == golden("gb_segre.golden.json")


def test_hilbert_text(capsys):
    rc = main(["hilbert", str(DATA / "segre.ideal")])
    out = capsys.readouterr().out
    assert rc == 0
    assert "dim 3  degree 3" in out
    assert "sectional genus 0" in out


def test_apolar_json(capsys):
    rc, payload = run_json(capsys, ["apolar", str(DATA / "w5.ideal")])
    assert rc == 0
    assert payload["rank1_count"] == 3
    assert payload["rank2_count"] == 1
    assert payload["base_locus"] == {"dim": 0, "degree": 3}
    assert len(payload["web"]) == 4


def test_quotient_command(capsys, tmp_path):
    a = tmp_path / "a.ideal"
    a.write_text("ring x0..x3 p=10009\nx0^2\nx0*x1\n")
    b = tmp_path / "b.ideal"
    b.write_text("ring x0..x3 p=10009\nx0\n")
    rc, payload = run_json(capsys, ["quotient", str(a), str(b)])
    assert rc == 0
    assert sorted(payload["basis"]) == ["x0", "x1"]


def test_quotient_ring_mismatch(capsys, tmp_path):
    a = tmp_path / "a.ideal"
    a.write_text("ring x0..x3 p=10009\nx0\n")
    b = tmp_path / "b.ideal"
    b.write_text("ring x0..x3 p=31957\nx0\n")
    assert main(["quotient", str(a), str(b)]) == 2
    assert "different rings" in capsys.readouterr().err


def test_usage_exit_codes(capsys):
    assert main(["delpezzo", "9"]) == 2
    assert main(["table", "7"]) == 2
    assert main(["scroll", "1,2,3"]) == 2
    assert main(["scroll", "1,1,1,1"]) == 2
    assert main(["--prime", "10007", "table", "1"]) == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_repro_prime_env(monkeypatch):
    monkeypatch.setenv("REPRO_PRIME", "31957")
    args = build_parser().parse_args(["table", "1"])
    assert args.prime == 31957
    monkeypatch.delenv("REPRO_PRIME")
    args = build_parser().parse_args(["table", "1"])
    assert args.prime == 10009


def test_runconfig_rejects_bad_primes():
    with pytest.raises(UsageError):
        RunConfig(prime=10007)  # 10007 is 5 mod 6
    with pytest.raises(UsageError):
        RunConfig(secondary_prime=7)  # 7 is 3 mod 4
    cfg = RunConfig()
    assert cfg.prime == 10009 and cfg.secondary_prime == 31957
