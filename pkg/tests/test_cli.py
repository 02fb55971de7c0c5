import subprocess
import sys

import pytest

from conftest import FIXTURES, GOOD
from solvcoh import cli


def fx(name):
    return str(FIXTURES / f"{name}.fixture")


def bad(name):
    return str(FIXTURES / "bad" / f"{name}.fixture")


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def machine(argv, capsys):
    code, out, err = run(argv + ["--format", "machine"], capsys)
    return code, dict(line.split("=", 1) for line in out.splitlines()), err


@pytest.mark.parametrize("name", GOOD)
def test_validate_good(name, capsys):
    code, fields, _ = machine(["validate", fx(name)], capsys)
    assert code == 0
    assert fields["valid"] == "true"


@pytest.mark.parametrize("name, code_", [("bogus_heisenberg", "not-nilpotent"), ("d_squared", "jacobi")])
def test_validate_bad(name, code_, capsys):
    code, fields, _ = machine(["validate", bad(name)], capsys)
    assert code == 2
    assert fields["valid"] == "false"
    assert code_ in fields["violations"]


def test_malformed_fixture(capsys):
    code, out, err = run(["validate", bad("relation_real_log")], capsys)
    assert code == 2
    assert "real-log-relation" in err and out == ""


def test_missing_file(capsys):
    code, _, err = run(["classify", "/nonexistent/file.fixture"], capsys)
    assert code == 2 and "cannot read" in err


def test_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["jumploci", fx("semidirect"), "--bogus"])
    assert exc.value.code == 2


def test_invalid_model_rejected_by_other_commands(capsys):
    code, _, err = run(["cohomology", bad("bogus_heisenberg")], capsys)
    assert code == 2 and "not-nilpotent" in err


def test_cohomology(capsys):
    code, fields, _ = machine(["cohomology", fx("semidirect"), "--class", "1"], capsys)
    assert code == 0
    assert fields["dims"] == "[0,2,4,4,4,2,0]"
    assert fields["total"] == "16"
    code, _, err = run(["cohomology", fx("semidirect"), "--class", "3"], capsys)
    assert code == 2 and "error" in err
    code, _, err = run(["cohomology", fx("semidirect"), "--class", "1,2"], capsys)
    assert code == 2


def test_jumploci_text(capsys):
    code, out, _ = run(["jumploci", fx("semidirect")], capsys)
    assert code == 0
    assert out.splitlines()[0] == "5 classes in the jump locus"
    assert "(0,2,4,4,4,2,0)" in out


def test_lefschetz(capsys):
    code, fields, _ = machine(["lefschetz", fx("kodaira_thurston"), "--omega", "omega"], capsys)
    assert code == 1
    assert fields["passed"] == "false"
    assert fields["iso."] == "[true,false,true]"
    code, fields, _ = machine(["lefschetz", fx("semidirect"), "--omega", "omega"], capsys)
    assert code == 0 and fields["hull_abelian"] == "true"
    code, _, err = run(["lefschetz", fx("semidirect"), "--omega", "nope"], capsys)
    assert code == 2 and "no form named" in err


def test_massey(capsys):
    code, fields, _ = machine(["massey", fx("heisenberg"), "--reps", "x1,x1,x2"], capsys)
    assert code == 0
    assert fields["vanishes"] == "false"
    assert fields["representative"] == "-g1^g3"
    code, _, err = run(["massey", fx("heisenberg"), "--reps", "x1,x2"], capsys)
    assert code == 2


def test_dolbeault_and_spectral(capsys):
    code, fields, _ = machine(["dolbeault", fx("semidirect"), "--theta", "theta"], capsys)
    assert code == 0 and fields["total"] == "[0,0,0,0,0,0,0]"
    code, fields, _ = machine(["spectral", fx("semidirect"), "--theta", "theta", "--t", "-3"], capsys)
    assert code == 0
    assert fields["Einf_totals"] == fields["direct_totals"] == "[0,0,0,0,0,0,0]"
    code, _, err = run(["spectral", fx("semidirect"), "--theta", "theta", "--t", "0"], capsys)
    assert code == 2 and "nonzero" in err
    code, out, _ = run(["spectral", fx("torus"), "--theta", "theta", "--pages", "2"], capsys)
    assert code == 0 and "E_2" in out


def test_shd(capsys):
    assert machine(["shd", fx("semidirect")], capsys)[0] == 0
    code, fields, _ = machine(["shd", fx("iwasawa")], capsys)
    assert code == 1 and fields["passed"] == "false"
    code, _, err = run(["shd", fx("heisenberg")], capsys)
    assert code == 2


def test_hyper_shd(capsys):
    code, fields, _ = machine(["hyper-shd", fx("semidirect"), "--theta", "theta", "--vartheta", "0"], capsys)
    assert code == 1
    assert fields["mismatch"] == "de Rham side dim 16 vs Dolbeault side dim 0"
    code, fields, _ = machine(["hyper-shd", fx("semidirect"), "--theta", "0", "--vartheta", "0"], capsys)
    assert code == 0 and fields["passed"] == "true"


def test_classify(capsys):
    code, fields, _ = machine(["classify", fx("semidirect")], capsys)
    assert code == 1
    assert fields["reasons"] == "[non-unitary-weights]"
    assert fields["kahler-admissible.citation"] == "kahler-iff-abelian-hull-and-unitary-weights"
    code, fields, _ = machine(["classify", fx("hyperelliptic")], capsys)
    assert code == 0 and fields["verdict"] == "true"
    code, fields, _ = machine(["classify", fx("heisenberg")], capsys)
    assert fields["reasons"] == "[non-abelian-hull,odd-dimension]"
    assert fields["hyper-lefschetz"] == "not-evaluated"


@pytest.mark.parametrize("cmd", [["classify"], ["jumploci"], ["hyper-shd", "--theta", "theta", "--vartheta", "0"]])
def test_machine_output_is_deterministic(cmd, capsys):
    argv = [cmd[0], fx("semidirect"), *cmd[1:], "--format", "machine"]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    assert capsys.readouterr().out == first
    assert first.splitlines()[0] == f"command={cmd[0]}"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "solvcoh", "jumploci", fx("semidirect"), "--format", "machine"],
        capture_output=True,
        text=True,
        env={"SOLVCOH_THREADS": "1", "PATH": ""},
        check=False,
    )
    assert proc.returncode == 0
    assert "count=5" in proc.stdout
