"""Certified digit extraction.

A digit is only emitted once the enclosure of the value, widened by a guard of 2 * rad on each side, falls between
two consecutive digit boundaries. Values too close to a terminating expansion raise BoundaryUnresolved instead of
guessing."""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from gmpy2 import mpq, mpz

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.constants import MAX_BASE, MIN_BASE
from transcert.error import BoundaryUnresolved
from transcert.expr.tree import Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.model import RootEnclosure
from transcert.rootfind.newton import refine_root

logger = logging.getLogger(__name__)

ValueRefiner = Callable[[int], BallReal]  # bits -> enclosure at most 2^-bits wide (as far as possible)

GUARD_FACTOR = 2  # Multiples of rad kept clear of a digit boundary
KEYSTREAM_BASE = 16


class RootComponent:
    """Refines one component (re / im) of a located root on demand, keeping the tightest enclosure seen"""

    def __init__(self, h: Expr, root: RootEnclosure, component: str = "re", budget: Budget = DEFAULT_BUDGET):
        self.h = h
        self.best = root
        self.component = component
        self.budget = budget

    def _component(self, box: BallReal | BallComplex, prec: int) -> BallReal:
        if isinstance(box, BallComplex):
            return box.re if self.component == "re" else box.im
        return box if self.component == "re" else BallReal.zero(prec)

    def __call__(self, bits: int) -> BallReal:
        self.best = refine_root(self.h, self.best, bits, self.budget)
        return self._component(self.best.box, self.best.prec_used)


def _floor_scaled(q: mpq, scale: mpz) -> mpz:
    """floor(q * scale) in exact integer arithmetic"""
    return (q.numerator * scale) // q.denominator


@dataclass(frozen=True)
class _Window:
    sign: str
    scaled: mpz  # floor(|value| * base^end)


@dataclass
class DigitStream:
    """A cursor over the base-b expansion of a certified value. Position 1 is the first digit after the radix
    point. Streams are deterministic but stateful - share the refiner, not the stream."""

    refiner: ValueRefiner
    base: int = 10
    cursor: int = 0  # Digits already consumed
    source: str | None = None  # Equation text the value came from
    root_index: int | None = None
    component: str = "re"
    max_bits: int = DEFAULT_BUDGET.max_bits

    def __post_init__(self) -> None:
        if not MIN_BASE <= self.base <= MAX_BASE:
            raise ValueError(f"base must be between {MIN_BASE} and {MAX_BASE} (got {self.base})")
        if self.cursor < 0:
            raise ValueError(f"cursor must be non negative (got {self.cursor})")

    @staticmethod
    def for_root(
        h: Expr,
        root: RootEnclosure,
        base: int = 10,
        component: str = "re",
        budget: Budget = DEFAULT_BUDGET,
        source: str | None = None,
        root_index: int | None = None,
    ) -> "DigitStream":
        return DigitStream(
            refiner=RootComponent(h, root, component, budget),
            base=base,
            source=source,
            root_index=root_index,
            component=component,
            max_bits=budget.max_bits,
        )

    @staticmethod
    def for_value(value: BallReal | Fraction | int, base: int = 10, prec: int = 64) -> "DigitStream":
        """A stream over a fixed value (no further refinement is possible)"""
        ball = value if isinstance(value, BallReal) else BallReal.exact(value, prec)
        return DigitStream(refiner=lambda bits: ball, base=base)

    def with_base(self, base: int, cursor: int = 0) -> "DigitStream":
        """Another stream over the same value"""
        return replace(self, base=base, cursor=cursor)

    def _bits_for(self, end: int) -> int:
        """Enough bits that 2^-bits <= base^-(end + 2)"""
        return (self.base ** (end + 2)).bit_length()

    def _try_window(self, value: BallReal, end: int) -> _Window | None:
        if not value.is_finite():
            return None
        mid, guard = mpq(value.mid), mpq(value.rad) * GUARD_FACTOR
        lo, hi = mid - guard, mid + guard
        if lo >= 0:
            sign = ""
        elif hi <= 0:
            sign, lo, hi = "-", -hi, -lo
        else:
            return None

        scale = mpz(self.base) ** end
        lo_scaled, hi_scaled = _floor_scaled(lo, scale), _floor_scaled(hi, scale)
        if lo_scaled != hi_scaled:
            return None
        return _Window(sign, lo_scaled)

    def _window(self, end: int) -> _Window:
        """floor(|value| * base^end), refining until every digit up to position end is certain"""
        bits = self._bits_for(end)
        while True:
            value = self.refiner(bits)
            window = self._try_window(value, end)
            if window is not None:
                return window
            if value.is_exact() and value.is_exact_zero():
                return _Window("", mpz(0))
            if bits * 2 > self.max_bits:
                logger.warning(f"Digit {end} in base {self.base} still unresolved at {bits} bits")
                raise BoundaryUnresolved(end, bits)
            bits *= 2
            logger.debug(f"Digit boundary too close at position {end}. Refining to {bits} bits")

    def integer_part(self) -> tuple[str, str]:
        """(sign, integer digits) of the value"""
        window = self._window(0)
        return window.sign, window.scaled.digits(self.base)

    def peek(self, n: int) -> str:
        """The next n digits without advancing the cursor"""
        if n < 1:
            raise ValueError(f"digit count must be positive (got {n})")
        window = self._window(self.cursor + n)
        fraction = window.scaled % (self.base**n)
        return fraction.digits(self.base).rjust(n, "0")

    def read(self, n: int) -> str:
        text = self.peek(n)
        self.cursor += n
        return text


def digits(stream: DigitStream, n: int) -> str:
    """The next n certified fractional digits of the stream's value (advancing the cursor)"""
    return stream.read(n)
