import json
import subprocess
import sys

from cyclofact.cli import EXIT_BUDGET, EXIT_DOMAIN_ERROR, EXIT_OK, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_lengths_document_matches_contract(capsys):
    doc = run_json(capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate")
    assert doc == {
        "q": "3/2",
        "value": "9",
        "min_length": 3,
        "max_length": 9,
        "elasticity": "3",
        "length_set": [3, 4, 5, 6, 7, 8, 9],
        "min_factorization": [[2, 1], [3, 2]],
    }


def test_lengths_integer_base_short_circuits(capsys):
    doc = run_json(capsys, "lengths", "--q", "2", "--value", "9")
    assert doc["min_length"] == 9
    assert doc["max_length"] == 9
    assert doc["elasticity"] == "1"


def test_regime_mismatch_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "antiprime", "--q", "3/2", "--k", "0", "--K", "2")
    assert code == EXIT_DOMAIN_ERROR
    payload = json.loads(err)
    assert "--q" in payload["error"]["message"]
    assert not out


def test_malformed_rational_names_the_flag(capsys):
    code, out, err = run_cli(capsys, "lengths", "--q", "x/y", "--value", "9")
    assert code == EXIT_DOMAIN_ERROR
    payload = json.loads(err)
    assert "--q" in payload["error"]["message"]
    assert "malformed rational" in payload["error"]["message"]


def test_unknown_flag_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "lengths", "--q", "3/2", "--value", "9", "--bogus")
    assert code == EXIT_DOMAIN_ERROR
    assert "--bogus" in json.loads(err)["error"]["message"]


def test_minimal_pair_from_string_and_rational(capsys):
    doc = run_json(capsys, "minimal-pair", "X^2 - 3X + 1")
    assert doc == {"ell": 1, "p": [[0, 1], [2, 1]], "q0": [[1, 3]]}
    doc = run_json(capsys, "minimal-pair", "--rational", "3/2")
    assert doc == {"ell": 2, "p": [[1, 2]], "q0": [[0, 3]]}
    code, _, err = run_cli(capsys, "minimal-pair")
    assert code == EXIT_DOMAIN_ERROR


def test_member_and_factorize(capsys):
    doc = run_json(capsys, "member", "--q", "3/2", "--value", "13/4")
    assert doc["member"] is True
    assert doc["witness"] == [[0, 1], [2, 1]]
    doc = run_json(capsys, "member", "--q", "3/2", "--value", "1/2")
    assert doc["member"] is False and doc["witness"] is None
    doc = run_json(capsys, "factorize", "--q", "3/2", "--value", "9", "--enumerate")
    assert doc["min_factorization"] == [[2, 1], [3, 2]]
    assert doc["max_factorization"] == [[0, 9]]
    assert len(doc["factorizations"]) == 8
    code, _, err = run_cli(capsys, "factorize", "--q", "3/2", "--value", "1/2")
    assert code == EXIT_DOMAIN_ERROR


def test_budget_exhaustion_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CYCLOFACT_ORACLE_CAP", "3")
    code, out, err = run_cli(capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate")
    assert code == EXIT_BUDGET
    assert json.loads(err)["error"]["type"] == "OracleBudgetExceeded"


def test_oracle_cap_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("CYCLOFACT_ORACLE_CAP", "3")
    doc = run_json(
        capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate", "--oracle-cap", "100000"
    )
    assert doc["length_set"] == [3, 4, 5, 6, 7, 8, 9]


def test_construct_elasticity_document(capsys):
    doc = run_json(capsys, "construct-elasticity", "--q", "3/2", "--target", "5/3", "--scan-cap", "200")
    assert doc["achieved"] == "5/3"
    assert doc["min_length"] == 9 and doc["max_length"] == 15
    steps = [entry["step"] for entry in doc["construction_log"]]
    assert "select" in steps and "shift" in steps


def test_scan_csv_and_manifest(capsys, tmp_path):
    out_file = tmp_path / "scan.csv"
    code, out, err = run_cli(
        capsys, "elasticity-scan", "--q", "3/2", "--bound", "4", "--out", str(out_file)
    )
    assert code == EXIT_OK
    lines = out_file.read_text().strip().splitlines()
    assert lines[0] == "value_num,value_den,min_len,max_len,elasticity"
    assert lines[-1].startswith("# manifest: complete")
    assert "3,1,2,3,3/2" in lines


def test_deterministic_output_across_threads(capsys):
    _, out1, _ = run_cli(capsys, "elasticity-scan", "--q", "3/2", "--bound", "6")
    _, out2, _ = run_cli(capsys, "elasticity-scan", "--q", "3/2", "--bound", "6", "--threads", "4")
    assert out1 == out2
    _, again, _ = run_cli(capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate")
    _, again2, _ = run_cli(capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate")
    assert again == again2


def test_omega_interval_document(capsys):
    doc = run_json(capsys, "omega-interval", "--q", "3/2", "--atom", "5/4")
    assert doc["omega"] == 4
    assert doc["conductor"] == 2
    assert doc["checks"]["blocked_outside_monoid"] is True
    assert doc["checks"]["divisible_inside_monoid"] is True


def test_antiprime_document(capsys):
    doc = run_json(capsys, "antiprime", "--q", "2/3", "--k", "0", "--K", "10")
    assert doc["N"] == 6
    assert doc["x"] == "64"
    assert doc["presentation"] == [[6, 729]]
    assert set(doc["checks"].values()) == {"pass"}


def test_documents_round_trip(capsys):
    from fractions import Fraction

    from cyclofact.polynomials import NatPoly
    from cyclofact.rationals import parse_rat

    doc = run_json(capsys, "lengths", "--q", "3/2", "--value", "9", "--enumerate")
    assert parse_rat(doc["q"]) == Fraction(3, 2)
    assert parse_rat(doc["value"]) == Fraction(9)
    assert parse_rat(doc["elasticity"]) == Fraction(3)
    witness = NatPoly.from_pairs(doc["min_factorization"])
    assert witness.eval(Fraction(3, 2)) == 9
    assert witness.length() == doc["min_length"]

    doc = run_json(capsys, "antiprime", "--q", "2/3", "--k", "0", "--K", "10")
    quotient = NatPoly.from_pairs(doc["certificate"]["quotient"])
    assert quotient.eval(Fraction(2, 3)) == parse_rat(doc["x"]) - parse_rat(
        doc["certificate"]["divisor"]
    )


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclofact.cli", "member", "--q", "3/2", "--value", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["member"] is True
