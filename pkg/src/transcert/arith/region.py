from dataclasses import dataclass
from fractions import Fraction

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.arith.rounding import to_fraction

# Subdivisions split slightly off-centre so that "nice" rational roots never land on a split line
SPLIT_RATIO = Fraction(65, 128)


def _fmt(value: Fraction) -> str:
    return f"{float(value):.10g}"


@dataclass(frozen=True)
class Interval:
    """A closed real interval with exact rational endpoints"""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"Interval lo {self.lo} > hi {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def split_point(self) -> Fraction:
        return self.lo + self.width * SPLIT_RATIO

    def bisect(self) -> tuple["Interval", "Interval"]:
        split = self.split_point()
        return Interval(self.lo, split), Interval(split, self.hi)

    def ball(self, prec: int) -> BallReal:
        return BallReal.from_bounds(self.lo, self.hi, prec)

    def contains_ball(self, ball: BallReal, strict: bool = True) -> bool:
        if not ball.is_finite():
            return False
        lo, hi = to_fraction(ball.lower_exact()), to_fraction(ball.upper_exact())
        if strict:
            return self.lo < lo and hi < self.hi
        return self.lo <= lo and hi <= self.hi

    @staticmethod
    def from_ball(ball: BallReal) -> "Interval":
        return Interval(to_fraction(ball.lower_exact()), to_fraction(ball.upper_exact()))

    def __str__(self) -> str:
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"


@dataclass(frozen=True)
class Rect:
    """A closed axis aligned rectangle in the complex plane with exact rational corners"""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    def __post_init__(self) -> None:
        if self.re_lo >= self.re_hi or self.im_lo >= self.im_hi:
            raise ValueError(f"Degenerate rectangle {self}")

    @staticmethod
    def square(radius: Fraction) -> "Rect":
        """[-radius, radius]^2"""
        return Rect(-radius, radius, -radius, radius)

    @staticmethod
    def from_ball(ball: BallComplex) -> "Rect":
        re, im = Interval.from_ball(ball.re), Interval.from_ball(ball.im)
        return Rect(re.lo, re.hi, im.lo, im.hi)

    @property
    def width(self) -> Fraction:
        return self.re_hi - self.re_lo

    @property
    def height(self) -> Fraction:
        return self.im_hi - self.im_lo

    def size(self) -> Fraction:
        return max(self.width, self.height)

    def ball(self, prec: int) -> BallComplex:
        return BallComplex.from_bounds(self.re_lo, self.re_hi, self.im_lo, self.im_hi, prec)

    def quadrisect(self, ratio: tuple[Fraction, Fraction] = (SPLIT_RATIO, SPLIT_RATIO)) -> list["Rect"]:
        """Four children split at the given fractions of width and height (south-west, south-east,
        north-west, north-east)"""
        sx = self.re_lo + self.width * ratio[0]
        sy = self.im_lo + self.height * ratio[1]
        return [
            Rect(self.re_lo, sx, self.im_lo, sy),
            Rect(sx, self.re_hi, self.im_lo, sy),
            Rect(self.re_lo, sx, sy, self.im_hi),
            Rect(sx, self.re_hi, sy, self.im_hi),
        ]

    def expanded(self, delta: Fraction) -> "Rect":
        return Rect(self.re_lo - delta, self.re_hi + delta, self.im_lo - delta, self.im_hi + delta)

    def contains_ball(self, ball: BallComplex) -> bool:
        return Interval(self.re_lo, self.re_hi).contains_ball(ball.re, strict=False) and Interval(
            self.im_lo, self.im_hi
        ).contains_ball(ball.im, strict=False)

    def min_modulus_squared(self) -> Fraction:
        """The squared distance from 0 to the closest point of the rectangle"""
        dx = Fraction(0) if self.re_lo <= 0 <= self.re_hi else min(abs(self.re_lo), abs(self.re_hi))
        dy = Fraction(0) if self.im_lo <= 0 <= self.im_hi else min(abs(self.im_lo), abs(self.im_hi))
        return dx * dx + dy * dy

    def is_symmetric_about_real_axis(self) -> bool:
        return self.im_lo == -self.im_hi

    def __str__(self) -> str:
        return f"[{_fmt(self.re_lo)}, {_fmt(self.re_hi)}] x [{_fmt(self.im_lo)}, {_fmt(self.im_hi)}]i"
