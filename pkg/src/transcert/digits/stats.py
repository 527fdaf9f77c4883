"""Randomness diagnostics over digit strings. These report statistics and p-values only - there is no pass / fail
threshold and no security claim."""

import logging
from typing import Iterable

import numpy as np
from scipy import stats

from transcert.constants import DIGIT_ALPHABET, MAX_BASE, MIN_BASE
from transcert.error import TooFewDigits
from transcert.model.output import StatisticName, StatResult, StatsReport

logger = logging.getLogger(__name__)

MIN_DIGITS: dict[StatisticName, int] = {
    StatisticName.CHI2: 100,
    StatisticName.SERIAL: 1000,
    StatisticName.RUNS: 1000,
}


def to_digit_array(text: str, base: int) -> np.ndarray:
    """Maps a digit string onto an array of digit values, rejecting characters outside the base"""
    alphabet = DIGIT_ALPHABET[:base]
    try:
        return np.array([alphabet.index(ch) for ch in text.lower()], dtype=np.int64)
    except ValueError:
        bad = next(ch for ch in text.lower() if ch not in alphabet)
        raise ValueError(f"'{bad}' is not a base {base} digit") from None


def _chi2_uniform(counts: np.ndarray) -> tuple[float, int, float]:
    """(statistic, df, p_value) of observed counts against a uniform expectation"""
    expected = counts.sum() / counts.size
    statistic = float(((counts - expected) ** 2 / expected).sum())
    df = counts.size - 1
    return statistic, df, float(stats.chi2.sf(statistic, df))


def chi2_test(values: np.ndarray, base: int) -> StatResult:
    statistic, df, p_value = _chi2_uniform(np.bincount(values, minlength=base))
    return StatResult(name=StatisticName.CHI2, statistic=statistic, p_value=p_value, df=df)


def serial_test(values: np.ndarray, base: int) -> StatResult:
    """chi2 over non-overlapping pairs (a trailing odd digit is dropped)"""
    pair_count = values.size // 2
    pairs = values[0 : 2 * pair_count : 2] * base + values[1 : 2 * pair_count : 2]
    statistic, df, p_value = _chi2_uniform(np.bincount(pairs, minlength=base * base))
    return StatResult(name=StatisticName.SERIAL, statistic=statistic, p_value=p_value, df=df)


def runs_test(values: np.ndarray, base: int) -> StatResult:
    """Wald-Wolfowitz runs of digits >= base / 2 vs digits < base / 2, two sided normal approximation"""
    above = values * 2 >= base
    runs = int(np.count_nonzero(np.diff(above))) + 1
    n = int(values.size)
    n1 = int(np.count_nonzero(above))
    n2 = n - n1

    mean = 2 * n1 * n2 / n + 1
    variance = 2 * n1 * n2 * (2 * n1 * n2 - n) / (n * n * (n - 1))
    if variance <= 0:
        return StatResult(
            name=StatisticName.RUNS,
            statistic=float(runs),
            p_value=0.0,
            note="every digit falls on the same side of base / 2",
        )

    z = (runs - mean) / np.sqrt(variance)
    return StatResult(
        name=StatisticName.RUNS, statistic=float(runs), p_value=float(2 * stats.norm.sf(abs(z))), z=float(z)
    )


def stat_tests(digits: str, tests: Iterable[StatisticName | str], base: int = 10) -> StatsReport:
    """Runs the requested diagnostics (in canonical order) over a digit string.

    Raises TooFewDigits when the string is shorter than a requested test needs."""
    if not MIN_BASE <= base <= MAX_BASE:
        raise ValueError(f"base must be between {MIN_BASE} and {MAX_BASE} (got {base})")
    requested = {StatisticName(t) for t in tests}
    if not requested:
        raise ValueError("At least one statistic must be requested")

    for name in requested:
        if len(digits) < MIN_DIGITS[name]:
            raise TooFewDigits(f"{name} needs at least {MIN_DIGITS[name]} digits (got {len(digits)})")

    values = to_digit_array(digits, base)
    results: list[StatResult] = []
    for name in StatisticName:
        if name not in requested:
            continue
        match name:
            case StatisticName.CHI2:
                result = chi2_test(values, base)
            case StatisticName.SERIAL:
                result = serial_test(values, base)
            case StatisticName.RUNS:
                result = runs_test(values, base)
        logger.info(f"{name} over {len(digits)} digits: statistic {result.statistic} p {result.p_value}")
        results.append(result)

    return StatsReport(base=base, digit_count=len(digits), results=results)
