import json

import pytest

import lpackets.cli as cli
from lpackets.oracle import OracleResult
from lpackets.report import CountReport


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_text_output(capsys):
    code, out, err = run(capsys, ["count", "--group", "sl2", "--q", "3"])
    assert code == 0
    assert "packet-weighted total: 7" in out
    assert "pipeline = spectral" in out


def test_count_json_output(capsys):
    code, out, _ = run(capsys, ["count", "--group", "gl2", "--q", "3",
                                "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 8
    assert data["pipeline"] == "spectral"
    assert list(data) == ["group", "cartan", "q", "pipeline", "strata",
                          "parameter_count", "total", "oracle_total",
                          "match", "conventions"]


def test_count_auto_picks_stratified_for_disconnected(capsys):
    code, out, _ = run(capsys, ["count", "--group", "o2", "--q", "3",
                                "--json"])
    assert code == 0
    assert json.loads(out)["pipeline"] == "stratified"


def test_count_both_pipelines(capsys):
    code, out, _ = run(capsys, ["count", "--group", "sl2", "--q", "3",
                                "--pipeline", "both", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["totals_agree"] is True
    assert data["spectral"]["total"] == data["stratified"]["total"] == 7


def test_compare_matches_oracle(capsys):
    code, out, _ = run(capsys, ["compare", "--group", "pgl2", "--q", "3",
                                "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["match"] is True
    assert data["oracle_total"] == 5


def test_config_file_input(tmp_path, capsys):
    cfg = tmp_path / "group.json"
    cfg.write_text(json.dumps({"type": "A1", "isogeny": "sc", "q": 5}))
    code, out, _ = run(capsys, ["count", "--config", str(cfg), "--json"])
    assert code == 0
    assert json.loads(out)["total"] == 9


def test_q_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "group.json"
    cfg.write_text(json.dumps({"type": "A1", "isogeny": "sc", "q": 5}))
    code, out, _ = run(capsys, ["count", "--config", str(cfg), "--q", "3",
                                "--json"])
    assert code == 0
    assert json.loads(out)["total"] == 7


def test_seed_flag_changes_nothing(capsys):
    base = run(capsys, ["count", "--group", "sp4", "--q", "3", "--json"])
    for seed in ("0", "31337"):
        got = run(capsys, ["count", "--group", "sp4", "--q", "3", "--json",
                           "--seed", seed])
        assert got == base


def test_cells_subcommand(capsys):
    code, out, _ = run(capsys, ["cells", "--type", "G2", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 12
    assert len(data["cells"]) == 3
    fams = sorted(c["family"] for c in data["cells"])
    assert fams == ["1", "1", "S3"]


def test_tables_subcommand(capsys):
    code, out, _ = run(capsys, ["tables", "--json"])
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"A1", "A2", "B2", "G2"}


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, ["oracle", "--group", "gl3", "--q", "2",
                                "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 168
    assert data["class_count"] == 6


def test_exit_code_bad_config(capsys):
    assert run(capsys, ["count", "--group", "nope", "--q", "3"])[0] == 2
    assert run(capsys, ["count", "--group", "sl2"])[0] == 2
    assert run(capsys, ["count", "--group", "sl2", "--q", "6"])[0] == 2
    assert run(capsys, ["cells", "--type", "E8"])[0] == 2


def test_exit_code_unsupported(capsys):
    assert run(capsys, ["compare", "--group", "g2", "--q", "5"])[0] == 3
    assert run(capsys, ["oracle", "--group", "g2", "--q", "2"])[0] == 3
    assert run(capsys, ["count", "--group", "sp4", "--q", "2"])[0] == 3


def test_exit_code_spectral_on_disconnected(capsys):
    code, _, err = run(capsys, ["count", "--group", "o2", "--q", "3",
                                "--pipeline", "spectral"])
    assert code == 3
    assert "stratified" in err


def test_exit_code_compare_mismatch(monkeypatch, capsys):
    def fake_oracle(name, q, cap=1 << 20):
        return OracleResult(name=name, q=q, order=1, class_count=999)

    monkeypatch.setattr(cli, "oracle_count", fake_oracle)
    code, _, err = run(capsys, ["compare", "--group", "sl2", "--q", "3"])
    assert code == 5
    assert "999" in err


def test_exit_code_pipeline_disagreement(monkeypatch, capsys):
    def fake_report(spec, rng=None, oracle_total=None):
        conventions = {"q_sqrt": "positive root of q",
                       "whittaker_torsor": 1, "table_version": "1"}
        return CountReport(group=spec.name, cartan="X", q=spec.q,
                           pipeline="stratified", strata=[],
                           conventions=conventions)

    monkeypatch.setitem(cli._REPORTERS, "stratified", fake_report)
    code, _, err = run(capsys, ["count", "--group", "sl2", "--q", "3",
                                "--pipeline", "both"])
    assert code == 4
    assert "disagree" in err
