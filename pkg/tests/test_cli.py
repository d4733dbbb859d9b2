import json

import pytest

from homleib.cli import main
from homleib.fixtures import leibniz_solvable2, paper_L
from homleib.io import serialize_algebra


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    data = json.loads(out)
    assert data["exit_status"] == code
    return code, data


@pytest.fixture
def corrupted(tmp_path):
    """paper_L with an extra bracket [e1, e2] = e1 that breaks multiplicativity."""
    text = serialize_algebra(paper_L(), name="corrupted").replace(
        '[["0", "0"], ["0", "0"]],', '[["0", "0"], ["1", "0"]],', 1)
    path = tmp_path / "corrupted.json"
    path.write_text(text)
    return str(path)


def test_verify_builtin(capsys):
    code, out, _ = run(capsys, "verify", "builtin:paper_L")
    assert code == 0
    assert out.count("[PASS]") == 2


def test_verify_failure_reports_witness(capsys, tmp_path):
    path = tmp_path / "solv2_as_lie.json"
    path.write_text(serialize_algebra(leibniz_solvable2(), kind="hom_lie"))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "[FAIL]" in out
    code, data = run_json(capsys, "verify", str(path))
    assert code == 1 and not all(c["passed"] for c in data["checks"])


def test_homology_abelian(capsys):
    code, data = run_json(capsys, "homology", "builtin:abelian2")
    assert code == 0
    assert [r["dim"] for r in data["homology"]["degrees"]] == [2, 4, 8]
    assert [r["homology_dim"] for r in data["homology"]["degrees"]] == [2, 4, 8]


def test_homology_max_degree_zero(capsys):
    code, data = run_json(capsys, "homology", "builtin:paper_L", "--max-degree", "0")
    assert code == 0 and data["homology"]["degrees"] == []


def test_cohomology_paper(capsys):
    code, data = run_json(capsys, "cohomology", "builtin:paper_L", "builtin:paper_A")
    assert code == 0
    rows = data["cohomology"]["degrees"]
    assert [(r["dim"], r["kernel_dim"], r["image_dim"], r["homology_dim"]) for r in rows] == [
        (1, 1, 0, 1), (2, 1, 0, 1), (3, 2, 1, 1)]


def test_cohomology_kind_mismatch_is_input_error(capsys):
    code, _, err = run(capsys, "cohomology", "builtin:paper_A", "builtin:paper_L")
    assert code == 2 and "expected hom_leibniz" in err


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "homology", "builtin:abelian3", "--max-degree", "9")
    assert code == 3 and "resource cap" in err
    code, _, _ = run(capsys, "shuffle-table", "5", "4")
    assert code == 3


def test_cup_on_worked_example(capsys):
    code, data = run_json(capsys, "cup", "builtin:paper_L", "builtin:paper_A")
    assert code == 0
    assert len(data["products"]) == 1
    assert data["square_zero_signature"][0]["all_squares_zero"] is False
    code, out, _ = run(capsys, "cup", "builtin:paper_L", "builtin:paper_A", "--deg", "1", "2")
    assert code == 0 and "HL^3" in out


def test_paper_fixtures(capsys):
    code, out, _ = run(capsys, "paper-fixtures")
    assert code == 0
    assert out.count("[DIVERGE]") == 3 and out.count("[MATCH]") == 13
    code, data = run_json(capsys, "paper-fixtures")
    assert code == 0
    assert [ln["tag"] for ln in data["audit"]["lines"]].count("DIVERGE") == 3


def test_shuffle_table(capsys):
    code, data = run_json(capsys, "shuffle-table", "1", "1")
    assert code == 0 and len(data["shuffles"]) == 2
    assert data["rho"] == [{"coefficient": "1", "permutation": [1, 2]}]
    code, data = run_json(capsys, "shuffle-table", "2", "1")
    assert len(data["shuffles"]) == 3 and len(data["rho"]) == 2
    code, data = run_json(capsys, "shuffle-table", "0", "3")
    assert data["shuffles"] == [{"shuffle": [1, 2, 3], "sign": 1}] and "rho" not in data


def test_check_identities_passes_on_worked_example(capsys):
    code, data = run_json(capsys, "check-identities", "builtin:paper_L", "builtin:paper_A",
                          "--max-total-degree", "3")
    assert code == 0 and data["status"] == "PASS"
    names = [ln["name"] for ln in data["lines"]]
    assert "shuffle relation certificate" in names
    assert data["ledger"]["shuffle relation variant"] == "1_n(x)(tau.rho)"


def test_check_identities_fails_on_corrupted_input(capsys, corrupted):
    code, out, _ = run(capsys, "check-identities", corrupted, "builtin:paper_A")
    assert code == 1
    assert "[FAIL] L multiplicative" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "--json", "cup", "builtin:paper_L", "builtin:paper_A")
    second = run(capsys, "--json", "cup", "builtin:paper_L", "builtin:paper_A")
    assert first == second


def test_global_flags_after_subcommand(capsys):
    code, data = run_json(capsys, "homology", "builtin:abelian1", "--max-degree", "2")
    assert code == 0 and len(data["homology"]["degrees"]) == 2
