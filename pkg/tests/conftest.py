import logging
from fractions import Fraction

import pytest
from rich.console import Console

from transcert.arith.region import Interval, Rect
from transcert.model.config import DEFAULT_BUDGET, Budget

# e^x + x - 12 = 0 has exactly one real root, in [2, 3]
NOTE_EQUATION = "e^x + x - 12 = 0"
NOTE_ROOT = "2.27472787148"  # 2.27472787148009609...


@pytest.fixture
def budget() -> Budget:
    return DEFAULT_BUDGET


@pytest.fixture
def small_budget() -> Budget:
    """Tight limits so that budget exhaustion paths are quick to reach"""
    return Budget(refine_doublings=2, real_depth=6, complex_depth=3, segment_depth=6, perturb_retries=1)


@pytest.fixture
def note_interval() -> Interval:
    return Interval(Fraction(2), Fraction(3))


@pytest.fixture
def unit_rect() -> Rect:
    return Rect(Fraction(-1), Fraction(1), Fraction(-1), Fraction(1))


@pytest.fixture
def record_console() -> Console:
    """A console that records (rather than prints) so tests can inspect rendered output"""
    return Console(record=True, width=160, color_system=None)


@pytest.fixture(autouse=True)
def quiet_logging():
    """The CLI reconfigures the root logger, reset it after every test"""
    yield
    logging.getLogger().setLevel(logging.WARNING)
