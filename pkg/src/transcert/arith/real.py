from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq

from transcert.arith.rounding import (
    DOWN,
    UP,
    rad_down,
    rad_up,
    round_value,
    rounding,
    rounding_error,
    to_fraction,
    to_hex,
    to_mpq,
)
from transcert.constants import MIN_PREC
from transcert.error import DivisorMayBeZero

Scalar = Union[int, Fraction, mpq]


def _as_rad(value: mpfr) -> mpfr:
    """Rounds a nonnegative bound up to a radius"""
    with rad_up():
        return gmpy2.mpfr(value)


@dataclass(frozen=True, slots=True)
class BallReal:
    """A real ball [mid - rad, mid + rad]. mid carries prec bits (round to nearest), rad carries RAD_PREC bits
    (always rounded up). An infinite rad represents the whole real line."""

    mid: mpfr
    rad: mpfr
    prec: int

    # region constructors

    @staticmethod
    def exact(value: Scalar | mpfr, prec: int) -> "BallReal":
        """The smallest ball (at prec) containing value. Exactly representable values get rad 0"""
        prec = max(prec, MIN_PREC)
        if isinstance(value, mpfr):
            mid = round_value(value, prec)
            exact_value = mpq(value)
        else:
            exact_value = to_mpq(value) if isinstance(value, Fraction) else mpq(value)
            mid = round_value(exact_value, prec)
        if mid.rc == 0 and mpq(mid) == exact_value:
            return BallReal(mid, mpfr(0), prec)
        with rad_up():
            rad = gmpy2.mpfr(abs(mpq(mid) - exact_value))
        return BallReal(mid, rad, prec)

    @staticmethod
    def from_bounds(lo: Scalar | mpfr, hi: Scalar | mpfr, prec: int) -> "BallReal":
        """The ball (at prec) enclosing the interval [lo, hi]"""
        prec = max(prec, MIN_PREC)
        lo_q = to_mpq(lo) if not isinstance(lo, mpfr) else mpq(lo)
        hi_q = to_mpq(hi) if not isinstance(hi, mpfr) else mpq(hi)
        if lo_q > hi_q:
            lo_q, hi_q = hi_q, lo_q
        mid = round_value((lo_q + hi_q) / 2, prec)
        mid_q = mpq(mid)
        with rad_up():
            rad = gmpy2.mpfr(max(mid_q - lo_q, hi_q - mid_q))
        return BallReal(mid, rad, prec)

    @staticmethod
    def whole(prec: int) -> "BallReal":
        return BallReal(mpfr(0), gmpy2.inf(), prec)

    @staticmethod
    def zero(prec: int) -> "BallReal":
        return BallReal(mpfr(0), mpfr(0), prec)

    # endregion

    # region queries

    def is_finite(self) -> bool:
        return gmpy2.is_finite(self.rad) and gmpy2.is_finite(self.mid)

    def is_exact(self) -> bool:
        return self.rad == 0

    def is_exact_zero(self) -> bool:
        return self.rad == 0 and self.mid == 0

    def contains_zero(self) -> bool:
        # Comparisons between mpfr values are exact
        if not self.is_finite():
            return True
        return gmpy2.cmp_abs(self.mid, self.rad) <= 0

    def excludes_zero(self) -> bool:
        return not self.contains_zero()

    def is_positive(self) -> bool:
        """True if every member of the ball is > 0"""
        return self.is_finite() and self.mid > 0 and gmpy2.cmp_abs(self.mid, self.rad) > 0

    def is_negative(self) -> bool:
        return self.is_finite() and self.mid < 0 and gmpy2.cmp_abs(self.mid, self.rad) > 0

    def lower_exact(self) -> mpq:
        return mpq(self.mid) - mpq(self.rad)

    def upper_exact(self) -> mpq:
        return mpq(self.mid) + mpq(self.rad)

    def lower(self) -> mpfr:
        """Lower endpoint rounded outward (down) to prec bits"""
        if not self.is_finite():
            return -gmpy2.inf()
        with rounding(self.prec, DOWN):
            return self.mid - self.rad

    def upper(self) -> mpfr:
        """Upper endpoint rounded outward (up) to prec bits"""
        if not self.is_finite():
            return gmpy2.inf()
        with rounding(self.prec, UP):
            return self.mid + self.rad

    def contains(self, other: "BallReal | Scalar") -> bool:
        """True if other is entirely inside this ball (exact comparison)"""
        if not self.is_finite():
            return True
        if not isinstance(other, BallReal):
            value = to_mpq(other) if isinstance(other, Fraction) else mpq(other)
            return self.lower_exact() <= value <= self.upper_exact()
        if not other.is_finite():
            return False
        return self.lower_exact() <= other.lower_exact() and other.upper_exact() <= self.upper_exact()

    def contains_interior(self, other: "BallReal") -> bool:
        """True if other sits strictly inside this ball"""
        if not other.is_finite():
            return False
        if not self.is_finite():
            return True
        return self.lower_exact() < other.lower_exact() and other.upper_exact() < self.upper_exact()

    def overlaps(self, other: "BallReal") -> bool:
        if not self.is_finite() or not other.is_finite():
            return True
        return self.lower_exact() <= other.upper_exact() and other.lower_exact() <= self.upper_exact()

    def width(self) -> mpfr:
        with rad_up():
            return 2 * self.rad

    def magnitude(self) -> mpfr:
        """Upper bound on |x| over the ball (RAD_PREC bits)"""
        with rad_up():
            return abs(self.mid) + self.rad

    def mignitude(self) -> mpfr:
        """Lower bound on |x| over the ball (RAD_PREC bits), 0 if the ball contains zero"""
        if self.contains_zero():
            return mpfr(0)
        with rad_down():
            return abs(self.mid) - self.rad

    def intersect(self, other: "BallReal") -> "BallReal | None":
        """The ball enclosing the intersection of both balls or None if they are disjoint"""
        if not self.is_finite():
            return other
        if not other.is_finite():
            return self
        lo = max(self.lower_exact(), other.lower_exact())
        hi = min(self.upper_exact(), other.upper_exact())
        if lo > hi:
            return None
        return BallReal.from_bounds(lo, hi, max(self.prec, other.prec))

    def with_prec(self, prec: int) -> "BallReal":
        """Re-rounds the midpoint to a new precision (the rounding error is absorbed into rad)"""
        if prec == self.prec:
            return self
        if not self.is_finite():
            return BallReal.whole(prec)
        mid = round_value(self.mid, prec)
        err = rounding_error(mid, prec)
        with rad_up():
            rad = self.rad + err
        return BallReal(mid, rad, prec)

    def point(self) -> "BallReal":
        """The midpoint as an exact ball"""
        return BallReal(self.mid, mpfr(0), self.prec)

    def endpoints(self) -> tuple["BallReal", "BallReal"]:
        """Exact (rad 0) balls at each endpoint, rounded outward"""
        return BallReal(self.lower(), mpfr(0), self.prec), BallReal(self.upper(), mpfr(0), self.prec)

    def mid_fraction(self) -> Fraction:
        return to_fraction(self.mid)

    def __float__(self) -> float:
        return float(self.mid)

    def __str__(self) -> str:
        return f"[{self.mid:.17g} +/- {self.rad:.3g}]"

    def hex_mid(self) -> str:
        return to_hex(self.mid)

    def hex_rad(self) -> str:
        return to_hex(self.rad)

    # endregion

    # region arithmetic

    def _coerce(self, other: "BallReal | Scalar") -> "BallReal":
        if isinstance(other, BallReal):
            return other
        if isinstance(other, (int, Fraction, mpq)):
            return BallReal.exact(other, self.prec)
        return NotImplemented

    def __neg__(self) -> "BallReal":
        with rounding(self.prec):
            return BallReal(-self.mid, self.rad, self.prec)

    def __pos__(self) -> "BallReal":
        return self

    def __add__(self, other: "BallReal | Scalar") -> "BallReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = max(self.prec, other.prec)
        if not self.is_finite() or not other.is_finite():
            return BallReal.whole(prec)
        with rounding(prec):
            mid = self.mid + other.mid
        err = rounding_error(mid, prec)
        with rad_up():
            rad = self.rad + other.rad + err
        return BallReal(mid, rad, prec)

    __radd__ = __add__

    def __sub__(self, other: "BallReal | Scalar") -> "BallReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BallReal":
        return (-self) + other

    def __mul__(self, other: "BallReal | Scalar") -> "BallReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = max(self.prec, other.prec)
        if not self.is_finite() or not other.is_finite():
            if self.is_exact_zero() or other.is_exact_zero():
                return BallReal.zero(prec)
            return BallReal.whole(prec)
        with rounding(prec):
            mid = self.mid * other.mid
        err = rounding_error(mid, prec)
        with rad_up():
            rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad + err
        return BallReal(mid, rad, prec)

    __rmul__ = __mul__

    def __truediv__(self, other: "BallReal | Scalar") -> "BallReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.contains_zero():
            raise DivisorMayBeZero(f"Divisor {other} contains zero")
        prec = max(self.prec, other.prec)
        if not self.is_finite():
            return BallReal.whole(prec)
        with rounding(prec):
            mid = self.mid / other.mid
        err = rounding_error(mid, prec)
        if self.rad == 0 and other.rad == 0:
            return BallReal(mid, _as_rad(err), prec)
        # |x/y - xm/ym| <= (rx|ym| + |xm|ry) / (|ym| (|ym| - ry))
        with rad_down():
            denominator = (abs(other.mid) - other.rad) * abs(other.mid)
        with rad_up():
            numerator = self.rad * abs(other.mid) + abs(self.mid) * other.rad
            rad = numerator / denominator + err
        return BallReal(mid, rad, prec)

    def __rtruediv__(self, other: Scalar) -> "BallReal":
        return BallReal.exact(other, self.prec) / self

    def __pow__(self, exponent: int) -> "BallReal":
        if not isinstance(exponent, int):
            return NotImplemented
        return pow_int(self, exponent)

    def __abs__(self) -> "BallReal":
        if self.is_negative():
            return -self
        if self.is_positive():
            return self
        return BallReal.from_bounds(0, self.magnitude(), self.prec)

    def square(self) -> "BallReal":
        """x^2 as a ball that never dips below zero"""
        if not self.is_finite():
            return BallReal.whole(self.prec)
        if self.contains_zero():
            with rounding(self.prec, UP):
                hi = self.magnitude() * self.magnitude()
            return BallReal.from_bounds(0, hi, self.prec)
        squared = self * self
        return squared

    # endregion


def pow_int(base: BallReal, n: int) -> BallReal:
    """base^n by repeated squaring. Negative n inverts at the end (so base must exclude zero)"""
    if n < 0:
        return BallReal.exact(1, base.prec) / pow_int(base, -n)
    if n == 0:
        return BallReal.exact(1, base.prec)
    result: BallReal | None = None
    square = base
    while n:
        if n & 1:
            result = square if result is None else result * square
        n >>= 1
        if n:
            square = square.square()
    assert result is not None
    return result
