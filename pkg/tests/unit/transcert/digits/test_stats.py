import pytest

from transcert.digits.stats import stat_tests, to_digit_array
from transcert.error import TooFewDigits
from transcert.model.output import StatisticName


def test_chi2_constant_digits():
    report = stat_tests("0" * 1000, ["chi2"])
    assert report.digit_count == 1000
    assert report.base == 10
    result = report.result(StatisticName.CHI2)
    assert result.statistic == pytest.approx(9000)
    assert result.df == 9
    assert result.p_value < 1e-100


def test_chi2_uniform_digits():
    result = stat_tests("0123456789" * 100, [StatisticName.CHI2]).result(StatisticName.CHI2)
    assert result.statistic == pytest.approx(0)
    assert result.p_value == pytest.approx(1)


def test_chi2_binary():
    result = stat_tests("01" * 500, ["chi2"], base=2).result(StatisticName.CHI2)
    assert result.statistic == pytest.approx(0)
    assert result.df == 1


def test_serial():
    # Only the pairs 01, 23, 45, 67, 89 occur, 100 times each out of 100 possible pairs
    result = stat_tests("0123456789" * 100, ["serial"]).result(StatisticName.SERIAL)
    assert result.statistic == pytest.approx(9500)
    assert result.df == 99
    assert result.p_value < 1e-10


def test_runs():
    # 00000 11111 ... alternates every 5 digits so there are 200 runs where about 500 are expected
    result = stat_tests("0123456789" * 100, ["runs"]).result(StatisticName.RUNS)
    assert result.statistic == 200
    assert result.z < 0
    assert result.p_value < 1e-10
    assert result.df is None


def test_runs_single_side():
    result = stat_tests("0" * 1000, ["runs"]).result(StatisticName.RUNS)
    assert result.statistic == 1
    assert result.p_value == 0.0
    assert result.note is not None


def test_canonical_order():
    report = stat_tests("0123456789" * 100, ["runs", "chi2", "serial"])
    assert [r.name for r in report.results] == [StatisticName.CHI2, StatisticName.SERIAL, StatisticName.RUNS]
    assert report.result(StatisticName.SERIAL) is not None


@pytest.mark.parametrize(
    "text, tests",
    [
        ("0" * 99, ["chi2"]),
        ("0" * 999, ["serial"]),
        ("0" * 500, ["chi2", "runs"]),
    ],
)
def test_too_few_digits(text: str, tests: list[str]):
    with pytest.raises(TooFewDigits):
        stat_tests(text, tests)


@pytest.mark.parametrize(
    "text, tests, base",
    [
        ("a" + "0" * 99, ["chi2"], 10),
        ("2" * 100, ["chi2"], 2),
        ("0" * 100, [], 10),
        ("0" * 100, ["chi2"], 1),
        ("0" * 100, ["entropy"], 10),
    ],
)
def test_stat_tests_rejects(text: str, tests: list[str], base: int):
    with pytest.raises(ValueError):
        stat_tests(text, tests, base)


def test_to_digit_array():
    assert to_digit_array("0aF9", 16).tolist() == [0, 10, 15, 9]
