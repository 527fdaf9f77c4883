import tempfile
from dataclasses import asdict, replace
from fractions import Fraction
from pathlib import Path

import pytest
from assertical.fake.generator import generate_class_instance

from transcert.arith.region import Interval, Rect
from transcert.error import ConfigError
from transcert.model.config import (
    DEFAULT_BUDGET,
    Budget,
    Command,
    Domain,
    RunConfig,
    load_budget,
)


def test_default_budget_valid():
    assert DEFAULT_BUDGET.get_validation_error() is None
    assert DEFAULT_BUDGET.max_bits == 2**20


@pytest.mark.parametrize(
    "budget, expected_fragment",
    [
        (Budget(refine_doublings=-1), "refine_doublings"),
        (Budget(cut_depth=-1), "cut_depth"),
        (Budget(start_prec=8), "start_prec"),
        (Budget(start_prec=512, max_prec=256), "max_prec"),
        (Budget(max_prec=4096, max_bits=1024), "max_bits"),
    ],
)
def test_budget_validation(budget: Budget, expected_fragment: str):
    error = budget.get_validation_error()
    assert error is not None
    assert expected_fragment in error


def test_load_budget_none():
    assert load_budget(None) is DEFAULT_BUDGET


def test_load_budget_errors():
    with tempfile.TemporaryDirectory() as tempdirname:
        with pytest.raises(ConfigError):
            load_budget(Path(tempdirname) / Path("file.dne"))

        empty_path = Path(tempdirname) / Path("file.empty")
        empty_path.write_text("")
        with pytest.raises(ConfigError):
            load_budget(empty_path)

        list_path = Path(tempdirname) / Path("file.list")
        list_path.write_text("- real_depth: 3\n- real_depth: 4\n")
        with pytest.raises(ConfigError):
            load_budget(list_path)

        invalid_path = Path(tempdirname) / Path("file.invalid")
        invalid_path.write_text("start_prec: 4\n")
        with pytest.raises(ConfigError):
            load_budget(invalid_path)


@pytest.mark.parametrize(
    "yaml, expected",
    [
        ("real_depth: 12", replace(DEFAULT_BUDGET, real_depth=12)),
        (
            """
max_prec: 8192 # Comment
max_bits: 65536
perturb_retries: 2
""",
            replace(DEFAULT_BUDGET, max_prec=8192, max_bits=65536, perturb_retries=2),
        ),
    ],
)
def test_load_budget(yaml: str, expected: Budget):
    with tempfile.TemporaryDirectory() as tempdirname:
        path = Path(tempdirname) / Path("budget.yaml")
        path.write_text(yaml)
        assert load_budget(path) == expected


def test_load_budget_every_field():
    budget = replace(generate_class_instance(Budget, seed=101), start_prec=64, max_prec=128, max_bits=256)
    with tempfile.TemporaryDirectory() as tempdirname:
        path = Path(tempdirname) / Path("budget.yaml")
        path.write_text("\n".join(f"{k}: {v}" for k, v in asdict(budget).items()))
        assert load_budget(path) == budget


INTERVAL = Interval(Fraction(2), Fraction(3))
RECT = Rect(Fraction(0), Fraction(1), Fraction(0), Fraction(1))


@pytest.mark.parametrize(
    "config, expected_fragment",
    [
        (RunConfig(Command.SOLVE, equation="x = 1", interval=INTERVAL), None),
        (RunConfig(Command.SOLVE, equation="x = 1", domain=Domain.COMPLEX, region=RECT), None),
        (
            RunConfig(
                Command.SOLVE, equation="x = 1", domain=Domain.COMPLEX, minimal_modulus=True, r_max=Fraction(2)
            ),
            None,
        ),
        (RunConfig(Command.DIGITS, equation="x = 1", interval=INTERVAL, count=10), None),
        (RunConfig(Command.TABLE, equation="x = 1", interval=INTERVAL, rows=2, cols=2), None),
        (RunConfig(Command.LW, domain=Domain.COMPLEX), None),
        (RunConfig(Command.SOLVE, equation="x = 1", interval=INTERVAL, prec=8), "--prec"),
        (RunConfig(Command.SOLVE, equation="x = 1", interval=INTERVAL, base=37), "--base"),
        (RunConfig(Command.SOLVE, equation="x = 1", interval=INTERVAL, root_index=-1), "--root-index"),
        (RunConfig(Command.DIGITS, equation="x = 1", interval=INTERVAL, count=4, offset=-1), "--offset"),
        (RunConfig(Command.DIGITS, equation="x = 1", interval=INTERVAL, count=4, component="abs"), "--component"),
        (RunConfig(Command.SOLVE, equation="x = 1"), "--domain real"),
        (RunConfig(Command.SOLVE, equation="x = 1", domain=Domain.COMPLEX), "--domain complex"),
        (RunConfig(Command.SOLVE, equation="x = 1", domain=Domain.COMPLEX, minimal_modulus=True), "--rmax"),
        (
            RunConfig(
                Command.SOLVE, equation="x = 1", domain=Domain.COMPLEX, minimal_modulus=True, r_max=Fraction(0)
            ),
            "--rmax",
        ),
        (RunConfig(Command.KEYGEN, equation="x = 1", interval=INTERVAL), "count"),
        (RunConfig(Command.TABLE, equation="x = 1", interval=INTERVAL, rows=2), "--rows"),
    ],
)
def test_run_config_validation(config: RunConfig, expected_fragment: str | None):
    error = config.get_validation_error()
    if expected_fragment is None:
        assert error is None
    else:
        assert error is not None
        assert expected_fragment in error
