import json
from pathlib import Path

import pytest

from polyvec.cli import TIMING_MARKER, build_parser, config_from_args, main
from polyvec.reporting import Report
from polyvec import suites

GOLDEN = Path(__file__).parent / "golden"

DEFAULT_ARGS = ["--d", "3", "--variant", "mbcov", "--deg", "3", "--trials", "25", "--seed", "42"]


def _summary_head(path: Path) -> str:
    text = path.read_text()
    return text.split(TIMING_MARKER)[0]


def test_exit_zero_on_pass(tmp_path, capsys):
    code = main(DEFAULT_ARGS + ["--check", "contraction", "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out.replace("info:FAIL", "")


def test_exit_two_on_bad_config(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--d", "3", "--variant", "potential", "--k", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--d", "3", "--variant", "potential"])  # missing --k
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--d", "4", "--check", "sl2"])  # sl2 needs d = 3
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--check", "nonsense"])
    assert exc.value.code == 2


def test_exit_one_on_verification_failure(monkeypatch, capsys):
    def failing_suite(cfg):
        report = Report()
        report.add("injected.failure", False, witness="forced")
        return report

    monkeypatch.setitem(suites.SUITES, "contraction", failing_suite)
    code = main(DEFAULT_ARGS + ["--check", "contraction"])
    assert code == 1


def test_informational_side_conditions_do_not_affect_status(monkeypatch):
    def informational(cfg):
        report = Report()
        report.add("injected.ok", True)
        report.add("injected.side", False, required=False)
        return report

    monkeypatch.setitem(suites.SUITES, "contraction", informational)
    assert main(DEFAULT_ARGS + ["--check", "contraction"]) == 0


def test_potential_five_two_jacobi(capsys):
    code = main(["--d", "5", "--variant", "potential", "--k", "2",
                 "--check", "jacobi", "--deg", "3", "--trials", "8"])
    assert code == 0
    out = capsys.readouterr().out
    assert "jacobi.potential(2).d5.arity5" in out


def test_json_format(capsys):
    code = main(DEFAULT_ARGS + ["--check", "contraction", "--format", "json"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    header = json.loads(lines[0])
    assert header["config"]["d"] == 3
    assert header["conventions"]["kappa_even"] == "2"
    for line in lines[1:]:
        record = json.loads(line)
        assert record["passed"] is True


def test_report_determinism(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(DEFAULT_ARGS + ["--out", str(out1), "--export-tables"]) == 0
    assert main(DEFAULT_ARGS + ["--out", str(out2), "--export-tables"]) == 0
    assert (out1 / "report.jsonl").read_bytes() == (out2 / "report.jsonl").read_bytes()
    assert _summary_head(out1 / "summary.txt") == _summary_head(out2 / "summary.txt")
    t1 = sorted((out1 / "tables").glob("*.json"))
    t2 = sorted((out2 / "tables").glob("*.json"))
    assert [p.name for p in t1] == [p.name for p in t2]
    for a, b in zip(t1, t2):
        assert a.read_bytes() == b.read_bytes()


def test_golden_default_campaign(tmp_path):
    out = tmp_path / "run"
    assert main(DEFAULT_ARGS + ["--out", str(out)]) == 0
    golden = GOLDEN / "report.jsonl"
    assert golden.exists(), "golden report missing; regenerate with scripts in README"
    assert (out / "report.jsonl").read_bytes() == golden.read_bytes()


def test_extension_table_contains_pairing_row(tmp_path):
    out = tmp_path / "run"
    assert main(DEFAULT_ARGS + ["--out", str(out), "--export-tables"]) == 0
    rows = json.loads((out / "tables" / "extension_structure_constants.json").read_text())
    hits = [r for r in rows if {r["left"], r["right"]} == {"xi1", "xi2*xi3"}]
    assert hits and all(r["e1"] in ("1", "-1") and r["bracket"] == "0" for r in hits)


def test_parser_defaults_roundtrip():
    args = build_parser().parse_args([])
    cfg = config_from_args(args)
    assert cfg.d == 3 and cfg.variant.kind == "mbcov"


def test_env_var_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("POLYVEC_OUT", str(tmp_path / "envout"))
    assert main(["--d", "2", "--check", "contraction", "--trials", "10"]) == 0
    assert (tmp_path / "envout" / "report.jsonl").exists()
