"""End-to-end tests for the asrg command line."""

import json
from pathlib import Path

import pytest
from app.cli import EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, EXIT_VIOLATED, run
from asrg_graphs import read_graph

TOY_FAMILY = {
    "laws": {
        "v": {"c": 1, "e": 11},
        "k": {"c": 1, "e": 10},
        "lambda": {"c": 1, "e": 1},
        "mu": {"c": 1, "e": 9},
    },
    "checks": ["krein_classical", "absolute_classical"],
}


def _json_out(capsys: pytest.CaptureFixture[str]) -> dict:
    return json.loads(capsys.readouterr().out)


@pytest.mark.integration
def test_analyze_petersen(petersen_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test analyze on Petersen: all certified bounds hold."""
    assert run(["analyze", "--graph", str(petersen_file)]) == EXIT_OK
    data = _json_out(capsys)
    assert data["schema"] == "asrg-report/1"
    assert data["spectrum"]["r"] == pytest.approx(1.0)
    assert data["spectrum"]["s"] == pytest.approx(-2.0)
    assert data["regularity"]["kind"] == "srg"
    assert data["srg_spectrum"]["f"] == 5
    names = [(b["name"], b.get("mode")) for b in data["bounds"]]
    assert ("krein_variant", "paper") in names
    assert ("krein_classical", None) in names
    assert data["e_matrix"]["trace_identity_holds"]


@pytest.mark.integration
def test_analyze_several_graphs(
    tmp_path: Path, petersen_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that several --graph options give a JSON array."""
    c6 = tmp_path / "c6.txt"
    c6.write_text("6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    argv = ["--workers", "2", "analyze", "--graph", str(petersen_file), "--graph", str(c6)]
    assert run(argv) in (EXIT_OK, EXIT_VIOLATED)
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 2
    assert data[1]["stats"]["mu_mean"] == {"num": 2, "den": 3}


@pytest.mark.integration
def test_check_krein_variant_modes(
    petersen_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that the printed Krein variant fails on Petersen while the exact one holds."""
    args = ["check", "--graph", str(petersen_file), "--bound", "krein-variant"]
    assert run([*args, "--mode", "paper"]) == EXIT_VIOLATED
    data = _json_out(capsys)
    assert data["bounds"][0]["expressions"][0]["value"] == pytest.approx(-4.0)
    assert run([*args, "--mode", "exact"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["bounds"][0]["expressions"][0]["value"] == pytest.approx(2.0)


@pytest.mark.integration
def test_check_params(capsys: pytest.CaptureFixture[str]) -> None:
    """Test bounds on explicit parameters."""
    params = ["v=50", "k=7", "r=2", "s=-3", "eps=0.5", "f1=6", "f2=6"]
    argv = ["check", "--bound", "absolute-variant"]
    for p in params:
        argv += ["--param", p]
    assert run(argv) == EXIT_VIOLATED
    data = _json_out(capsys)
    assert data["bounds"][0]["margin"] == pytest.approx(-14.0)
    assert run(["check", "--bound", "krein-classical", "--param", "v=10"]) == EXIT_INPUT
    assert run(["check", "--bound", "absolute-classical", "--param", "v"]) == EXIT_INPUT


@pytest.mark.integration
def test_check_sigma_floor(capsys: pytest.CaptureFixture[str]) -> None:
    """Test a sigma floor on explicit parameters."""
    argv = ["check", "--bound", "sigma-floor-krein"]
    for p in ("v=1e11", "k=1e10", "lambda=10", "mu=1e9"):
        argv += ["--param", p]
    assert run(argv) == EXIT_OK
    data = _json_out(capsys)
    assert data["sigma_floors"][0]["value"] == pytest.approx(316.2, rel=1e-3)


@pytest.mark.integration
def test_check_not_applicable(tmp_path: Path) -> None:
    """Test that the classical bounds refuse a graph that is not strongly regular."""
    c6 = tmp_path / "c6.txt"
    c6.write_text("6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    assert run(["check", "--graph", str(c6), "--bound", "krein-classical"]) == EXIT_INPUT


@pytest.mark.integration
def test_scan_toy_family(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the toy family scan exits with the violation status."""
    family = tmp_path / "toy.json"
    family.write_text(json.dumps(TOY_FAMILY))
    assert run(["scan", "--family", str(family), "--samples", "1e2,1e3,1e4"]) == EXIT_VIOLATED
    data = _json_out(capsys)
    assert {v["verdict"] for v in data["scan"]["verdicts"]} == {"infeasible"}


@pytest.mark.integration
def test_scan_numeric_failure(tmp_path: Path) -> None:
    """Test that a magnitude outside log space maps to the numeric exit status."""
    family = tmp_path / "huge.json"
    laws = dict(TOY_FAMILY["laws"])
    laws["v"] = {"c": 1, "e": "1" + "0" * 300}
    family.write_text(json.dumps({"laws": laws}))
    assert run(["scan", "--family", str(family), "--samples", "1e2,1e3,1e4"]) == EXIT_NUMERIC


@pytest.mark.integration
def test_field_info(capsys: pytest.CaptureFixture[str]) -> None:
    """Test field-info and the rejection of a non prime power."""
    assert run(["field-info", "--q", "9"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["field"]["q"] == 9
    assert data["field"]["gamma"] == 1
    assert data["stats"] is None
    assert data["spectrum"] is None
    assert data["e_matrix"] is None
    assert run(["field-info", "--q", "6"]) == EXIT_INPUT
    assert "NotPrimePower" in capsys.readouterr().err


@pytest.mark.integration
def test_no_graph_command(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test no-graph with the tower step and the graph file output."""
    out = tmp_path / "no.txt"
    argv = ["no-graph", "--n", "5", "--q", "3", "--eps", "1", "--tower", "--graph-out", str(out)]
    assert run(argv) == EXIT_OK
    data = _json_out(capsys)
    assert data["construction"]["v"] == 45
    assert data["tower_step"]["printed_k_match"] is False
    assert read_graph(out).v == 45
    assert run(["no-graph", "--n", "5", "--q", "3", "--eps", "-1"]) == EXIT_OK


@pytest.mark.integration
def test_cap_commands(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test cap construction to a file and the cap graph audit read back from it."""
    cap_file = tmp_path / "conic.cap"
    assert run(["cap", "--kind", "conic", "--n", "2", "--q", "3", "--cap-out", str(cap_file)]) == 0
    data = _json_out(capsys)
    assert data["cap_profile"]["h_histogram"] == [[1, 6], [2, 3]]
    assert run(["cap-graph", "--cap", str(cap_file)]) == EXIT_OK
    data = _json_out(capsys)
    assert data["cap_audit"]["identity_violations"] == 0
    assert data["cap_audit"]["mu_var"] == {"num": 8, "den": 9}
    assert run(["cap", "--kind", "conic"]) == EXIT_INPUT


@pytest.mark.integration
def test_tower_and_clique(petersen_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the tower and clique subcommands."""
    assert run(["tower", "--graph", str(petersen_file), "--m", "4", "--i", "1"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["tower_level"]["v_i"] == 3
    assert run(["clique", "--graph", str(petersen_file)]) == EXIT_OK
    data = _json_out(capsys)
    assert data["clique"]["clique_number"] == 2


@pytest.mark.integration
def test_exponent_and_approx(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the exponent and approx subcommands."""
    assert run(["exponent", "--kind", "cap", "--arg", "n=10"]) == EXIT_OK
    data = _json_out(capsys)
    assert data["exponent"]["value"] == {"num": 49, "den": 6}
    argv = ["approx", "--case", "ii", "--k", "1e6", "--lam", "0", "--mu", "1e4"]
    assert run(argv) == EXIT_OK
    data = _json_out(capsys)
    assert data["approx"]["value"] == pytest.approx(-1e4)
    argv = ["approx", "--case", "i", "--k", "100", "--lam", "5", "--mu", "1"]
    assert run(argv) == EXIT_INPUT


@pytest.mark.integration
def test_output_options(
    tmp_path: Path, petersen_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test --out, --format text and the schema subcommand."""
    out = tmp_path / "report.json"
    assert run(["--out", str(out), "analyze", "--graph", str(petersen_file)]) == EXIT_OK
    assert json.loads(out.read_text())["stats"]["k"] == 3
    assert run(["--format", "text", "analyze", "--graph", str(petersen_file)]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith("schema: asrg-report/1")
    assert "bound krein_variant (uncertified): VIOLATED" in text
    assert run(["schema"]) == EXIT_OK
    assert "properties" in _json_out(capsys)


@pytest.mark.integration
def test_input_errors(tmp_path: Path) -> None:
    """Test missing files and argument errors."""
    assert run(["analyze", "--graph", str(tmp_path / "missing.txt")]) == EXIT_INPUT
    assert run(["scan", "--family", str(tmp_path / "missing.json"), "--samples", "1,2,3"]) == 2
    assert run(["no-graph", "--n", "5"]) == EXIT_INPUT
    assert run([]) == EXIT_INPUT
