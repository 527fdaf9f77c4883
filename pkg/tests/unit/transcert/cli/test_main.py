import json
from pathlib import Path

import pytest

from tests.conftest import NOTE_EQUATION, NOTE_ROOT
from transcert.cli.common import ExitCode
from transcert.cli.main import exit_code_for, root_parser, run
from transcert.error import (
    BoundaryUnresolved,
    ConfigError,
    InputNotCertified,
    NoRootWithin,
    ParseError,
    UndecidedError,
)
from transcert.schema.validator import DocumentKind, validate_json

NOTE_FRACTION = NOTE_ROOT.split(".")[1]


@pytest.fixture
def small_budget_file(tmp_path: Path) -> str:
    path = tmp_path / "budget.yaml"
    path.write_text("refine_doublings: 2\nreal_depth: 12\ncomplex_depth: 4\nsegment_depth: 8\nperturb_retries: 1\n")
    return str(path)


def _json_output(capsys: pytest.CaptureFixture[str], kind: DocumentKind) -> dict:
    document = json.loads(capsys.readouterr().out)
    assert validate_json(document, kind) == []
    return document


@pytest.mark.parametrize(
    "exc, expected",
    [
        (NoRootWithin(1), ExitCode.NO_ROOTS),
        (UndecidedError("stuck"), ExitCode.UNDECIDED),
        (BoundaryUnresolved(3, 1024), ExitCode.UNDECIDED),
        (InputNotCertified("refused"), ExitCode.REFUSED),
        (ConfigError("bad flag"), ExitCode.BAD_INPUT),
        (ParseError(2, {"number"}), ExitCode.BAD_INPUT),
    ],
)
def test_exit_code_for(exc: Exception, expected: ExitCode):
    assert exit_code_for(exc) == expected


def test_solve_json(capsys: pytest.CaptureFixture[str]):
    assert run(["solve", NOTE_EQUATION, "--region", "-100,100", "--output", "json"]) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.ROOTS)
    assert document["domain"] == "real"
    assert document["region"] == "-100,100"
    assert document["equation"]["text"] == NOTE_EQUATION
    (root,) = document["roots"]
    assert root["approx"]["re"].startswith("[2.2747278714")


def test_solve_is_deterministic(capsys: pytest.CaptureFixture[str]):
    argv = ["solve", "e^x - x + 7 = 0", "--domain", "complex", "--region", "0,3,-4,4", "--output", "json"]
    assert run(argv) == ExitCode.OK
    first = capsys.readouterr().out
    assert run(argv) == ExitCode.OK
    assert capsys.readouterr().out == first
    assert len(json.loads(first)["roots"]) == 2


def test_solve_text(capsys: pytest.CaptureFixture[str]):
    assert run(["solve", NOTE_EQUATION, "--region", "2,3"]) == ExitCode.OK
    assert "2.2747" in capsys.readouterr().out


def test_solve_minimal_modulus(capsys: pytest.CaptureFixture[str]):
    argv = ["solve", "x - 5 = 0", "--domain", "complex", "--minimal-modulus", "--rmax", "10", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.ROOTS)
    assert document["minimal_modulus"] is True
    assert document["r_max"] == "10"
    assert len(document["roots"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "x^2 + 1 = 0", "--region", "-10,10"],
        ["solve", "x - 5 = 0", "--domain", "complex", "--minimal-modulus", "--rmax", "1"],
        ["certify", "e^x - x + 7 = 0", "--region", "-10,10"],
        ["digits", "x^2 + 1 = 0", "--region", "-10,10", "--count", "5"],
    ],
)
def test_no_roots(argv: list[str]):
    assert run(argv) == ExitCode.NO_ROOTS


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["solve", "x + = 1", "--region", "0,1"],
        ["solve", "x = 1"],
        ["solve", "x = 1", "--region", "2,1"],
        ["solve", "x = 1", "--region", "0,1", "--prec", "8"],
        ["solve", "x = 1", "--region", "0,1", "--budget-file", "/does/not/exist.yaml"],
        ["solve", "x = 1", "--domain", "complex"],
        ["solve", "x = 1", "--region", "0,1", "--not-a-flag"],
        ["digits", NOTE_EQUATION, "--region", "2,3", "--count", "0"],
        ["digits", NOTE_EQUATION, "--region", "2,3", "--count", "5", "--root-index", "1"],
        ["lw", "--coefficients", "1", "2", "--exponents", "1"],
        ["lw", "--coefficients", "1", "--exponents", "x"],
        ["lw", "--coefficients", "1", "1", "--exponents", "2", "2"],
        ["stats", NOTE_EQUATION, "--region", "2,3", "--count", "10", "--tests", "chi2"],
    ],
)
def test_bad_input(argv: list[str]):
    assert run(argv) == ExitCode.BAD_INPUT


def test_solve_undecided(small_budget_file: str):
    argv = ["solve", "x^2 = 0", "--domain", "complex", "--region", "-1,1,-1,1", "--budget-file", small_budget_file]
    assert run(argv) == ExitCode.UNDECIDED


def test_certify_certified(capsys: pytest.CaptureFixture[str]):
    assert run(["certify", NOTE_EQUATION, "--region", "2,3", "--strict", "--output", "json"]) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert document["theorem"] == "Thm2"
    assert document["verdict"] == "Certified"
    assert document["strict"] is True


def test_certify_text(capsys: pytest.CaptureFixture[str]):
    assert run(["certify", "sin(x) = 1 - x", "--region", "0,1"]) == ExitCode.OK
    assert "Cor2" in capsys.readouterr().out


def test_certify_refused(capsys: pytest.CaptureFixture[str]):
    assert run(["certify", "pi^x + 4*x = 49", "--region", "3,16/5", "--output", "json"]) == ExitCode.REFUSED
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert document["reason"] == "NonAlgebraicConstant"


def test_certify_undecided(capsys: pytest.CaptureFixture[str], small_budget_file: str):
    argv = [
        "certify",
        "x*sin(x^2 - 2) = x^2 - 2",
        "--region",
        "13/10,3/2",
        "--budget-file",
        small_budget_file,
        "--output",
        "json",
    ]
    assert run(argv) == ExitCode.UNDECIDED
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert document["verdict"] == "Undecided"
    assert isinstance(document["witness_prec"], int)


def test_digits(capsys: pytest.CaptureFixture[str]):
    assert run(["digits", NOTE_EQUATION, "--region", "2,3", "--count", "11"]) == ExitCode.OK
    assert capsys.readouterr().out.strip() == NOTE_ROOT

    argv = ["digits", NOTE_EQUATION, "--region", "2,3", "--count", "6", "--offset", "5", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.DIGITS)
    assert document["digits"] == NOTE_FRACTION[5:]
    assert document["offset"] == 5
    assert document["integer_part"] == "2"
    assert document["source"] == NOTE_EQUATION


def test_table(capsys: pytest.CaptureFixture[str]):
    argv = ["table", NOTE_EQUATION, "--region", "2,3", "--rows", "3", "--cols", "4", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.TABLE)
    assert document["cells"][0][0] == NOTE_FRACTION[:5]
    assert len(document["cells"]) == 3
    assert all(len(row) == 4 for row in document["cells"])

    assert run(["table", NOTE_EQUATION, "--region", "2,3", "--rows", "1", "--cols", "2"]) == ExitCode.OK
    assert capsys.readouterr().out.strip() == f"{NOTE_FRACTION[:5]} {NOTE_FRACTION[5:10]}"


def test_keygen(capsys: pytest.CaptureFixture[str]):
    assert run(["keygen", NOTE_EQUATION, "--region", "2,3", "--bytes", "8"]) == ExitCode.OK
    key = capsys.readouterr().out.strip()
    assert len(key) == 16
    bytes.fromhex(key)

    assert run(["keygen", NOTE_EQUATION, "--region", "2,3", "--bytes", "6", "--offset", "4"]) == ExitCode.OK
    assert capsys.readouterr().out.strip() == key[4:]


def test_stats(capsys: pytest.CaptureFixture[str]):
    argv = ["stats", NOTE_EQUATION, "--region", "2,3", "--count", "200", "--tests", "chi2", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.STATS)
    assert document["digit_count"] == 200
    assert [r["name"] for r in document["results"]] == ["chi2"]


def test_encrypt_round_trip(tmp_path: Path):
    message = tmp_path / "message.txt"
    ciphertext = tmp_path / "message.enc"
    decrypted = tmp_path / "message.dec"
    message.write_bytes(b"meet me by the old oak tree")
    common = [NOTE_EQUATION, "--region", "2,3", "--offset", "16"]

    assert run(["encrypt", *common, "--input", str(message), "--output", str(ciphertext)]) == ExitCode.OK
    assert ciphertext.read_bytes() != message.read_bytes()
    assert len(ciphertext.read_bytes()) == len(message.read_bytes())
    assert run(["encrypt", *common, "--input", str(ciphertext), "--output", str(decrypted)]) == ExitCode.OK
    assert decrypted.read_bytes() == message.read_bytes()


def test_lw(capsys: pytest.CaptureFixture[str]):
    argv = ["lw", "--coefficients", "1", "-1/2", "--exponents", "1", "sqrt(2)", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert document["theorem"] == "LW"
    assert document["verdict"] == "Certified"


def test_lw_refused():
    assert run(["lw", "--coefficients", "3", "--exponents", "0"]) == ExitCode.REFUSED


def test_combine(capsys: pytest.CaptureFixture[str]):
    assert run(["combine", "e", "pi", "--minus", "--output", "json"]) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert document["theorem"] == "Prop1"
    assert document["subject"] == "(e) - (pi)i"
    assert [i["theorem"] for i in document["inputs"]] == ["Builtin", "Builtin"]


def test_combine_equation_operand(capsys: pytest.CaptureFixture[str]):
    argv = ["combine", NOTE_EQUATION, "sin(2)", "--region", "2,3", "--output", "json"]
    assert run(argv) == ExitCode.OK
    document = _json_output(capsys, DocumentKind.CERTIFICATE)
    assert [i["theorem"] for i in document["inputs"]] == ["Thm2", "FunctionValue"]


def test_combine_refused_operand():
    # ln(1) = 0 is refused so it can't be one of the parts
    assert run(["combine", "e", "ln(1)"]) == ExitCode.REFUSED


@pytest.mark.parametrize(
    "argv, dest, expected",
    [
        (["solve", "x = 1", "--region", "-10,10"], "region", "-10,10"),
        (["solve", "x = 1", "--region", "-100,100"], "region", "-100,100"),
        (["solve", "x = 1", "--domain", "complex", "--region", "-1,1,-1/2,1/2"], "region", "-1,1,-1/2,1/2"),
        (["solve", "x = 1", "--region", "-.5,1"], "region", "-.5,1"),
        (["lw", "--coefficients", "1", "-1/2", "--exponents", "1", "-2"], "coefficients", ["1", "-1/2"]),
        (["lw", "--coefficients", "1", "-1/2", "--exponents", "1", "-2"], "exponents", ["1", "-2"]),
    ],
)
def test_negative_values_are_not_flags(argv: list[str], dest: str, expected):
    args = root_parser.parse_args(argv)
    assert getattr(args, dest) == expected


def test_verbose_is_still_a_flag():
    args = root_parser.parse_args(["-v", "solve", "x = 1", "--region", "-1,1"])
    assert args.verbose is True
    assert args.region == "-1,1"


def test_solve_negative_region(capsys: pytest.CaptureFixture[str]):
    assert run(["solve", "x + 1/3 = 0", "--region", "-1,1", "--output", "json"]) == ExitCode.OK
    (root,) = _json_output(capsys, DocumentKind.ROOTS)["roots"]
    assert root["approx"]["re"].startswith("[-0.333")


def test_solve_complex_root_beside_pole(capsys: pytest.CaptureFixture[str]):
    argv = ["solve", "tan(x) = 1", "--domain", "complex", "--region", "0,2,-1/2,1/2", "--output", "json"]
    assert run(argv) == ExitCode.OK
    (root,) = _json_output(capsys, DocumentKind.ROOTS)["roots"]
    assert root["approx"]["re"].startswith("[0.785398163")


def test_solve_minimal_modulus_on_branch_cut():
    argv = ["solve", "ln(x) = 1/2", "--domain", "complex", "--minimal-modulus", "--rmax", "2"]
    assert run(argv) == ExitCode.UNDECIDED
