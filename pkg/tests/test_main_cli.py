# Some basic unit and integration tests for the 'garsidelab' CLI
#
# std imports
import json
import subprocess
import sys

EXAMPLE_MATRIX = "01011|01;01010|11"


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "garsidelab", *args],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
    )


def test_cli_normal_form():
    # given,
    given_cmd_args = [sys.executable, "-m", "garsidelab", "nf", "--n", "3"]
    given_cmd_args += ["2", "1", "1", "2"]

    # exercise,
    result_output = subprocess.check_output(given_cmd_args).decode().strip()

    # verify
    assert result_output == "D^0 . 2 1 . 1 2"


def test_cli_normal_form_json():
    # given,
    given_cmd_args = ["nf", "--json", "--n", "3", "1", "-2"]
    expected_data = {"n": 3, "inf": -1, "factors": [[2], [2, 1]]}

    # exercise,
    result = run(*given_cmd_args)

    # verify
    assert result.returncode == 0
    assert json.loads(result.stdout) == expected_data


def test_cli_rigid():
    result = run("rigid", "--n", "3", "1", "-2")
    assert result.returncode == 0
    assert result.stdout.decode().strip() == "D^-1 . 2 . 2 1: rigid"


def test_cli_bad_letter():
    # given,
    given_cmd_args = ["nf", "--n", "3", "3"]

    # exercise,
    result = run(*given_cmd_args)

    # verify
    assert result.returncode == 2
    assert b"LetterOutOfRange" in result.stderr


def test_cli_conjugate():
    result = run("conjugate", "--json", "--n", "3", "1 1", "2 2")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["conjugate"] is True
    assert data["witness"]["n"] == 3


def test_cli_check_reduction():
    result = run("check-reduction", "--n", "3", "1")
    assert result.returncode == 0
    assert result.stdout.decode().splitlines()[0] == "{1..2}: orbit {1..2}"


def test_cli_family_build():
    # given,
    given_cmd_args = ["family", "build", "--json", "--matrix", EXAMPLE_MATRIX]

    # exercise,
    result = run(*given_cmd_args)
    data = json.loads(result.stdout)

    # verify
    assert result.returncode == 0
    assert (data["n"], data["k"], data["p"], data["m0"]) == (17, 2, 7, True)
    assert data["element"] == {"rows": ["0101101", "0101011"], "b": 5, "side": "plain"}


def test_cli_family_rset():
    result = run("family", "rset", "--json", "--matrix", EXAMPLE_MATRIX)
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["size"] == data["expected"] == 32
    assert len(data["nodes"]) == 32
    assert data["lattices"] == [8, 8, 8, 8]


def test_cli_family_rset_needs_m0():
    result = run("family", "rset", "--matrix", "011;011")
    assert result.returncode == 2
    assert b"NotM0" in result.stderr


def test_cli_family_table():
    result = run("family", "table", "--n", "17", "--k", "2")
    assert result.returncode == 0
    assert result.stdout.decode().strip() == "n=17 k=2 32 >= 31.48"


def test_cli_rset_is_guarded():
    result = run("rset", "--n", "14", "1", "1")
    assert result.returncode == 2
    assert b"--force" in result.stderr


def test_cli_rset_small():
    result = run("rset", "--json", "--n", "3", "1", "1")
    assert result.returncode == 0
    assert json.loads(result.stdout)["size"] == 2


def test_cli_rset_matrix_uses_closed_form():
    result = run("rset", "--json", "--matrix", EXAMPLE_MATRIX)
    assert result.returncode == 0
    assert json.loads(result.stdout)["size"] == 32


def test_cli_rset_oracle_matrix_is_guarded():
    result = run("rset", "--oracle", "--matrix", EXAMPLE_MATRIX)
    assert result.returncode == 2
    assert b"--force" in result.stderr


def test_cli_verify():
    # given,
    given_cmd_args = ["verify", "--n", "14", "--k", "2", "--samples", "1"]
    given_cmd_args += ["--no-oracle"]

    # exercise,
    result = run(*given_cmd_args)
    output = result.stdout.decode()

    # verify
    assert result.returncode == 0
    assert "[pass] rigid-set-size" in output
    assert "expected 16, counted 16" in output
