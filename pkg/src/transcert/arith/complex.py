from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

from transcert.arith.real import BallReal, Scalar
from transcert.error import DivisorMayBeZero


@dataclass(frozen=True, slots=True)
class BallComplex:
    """A rectangular complex ball: the product of a real ball for each component"""

    re: BallReal
    im: BallReal

    @property
    def prec(self) -> int:
        return max(self.re.prec, self.im.prec)

    @staticmethod
    def exact(re: Scalar, im: Scalar, prec: int) -> "BallComplex":
        return BallComplex(BallReal.exact(re, prec), BallReal.exact(im, prec))

    @staticmethod
    def from_real(value: BallReal) -> "BallComplex":
        return BallComplex(value, BallReal.zero(value.prec))

    @staticmethod
    def from_bounds(re_lo: Scalar, re_hi: Scalar, im_lo: Scalar, im_hi: Scalar, prec: int) -> "BallComplex":
        return BallComplex(BallReal.from_bounds(re_lo, re_hi, prec), BallReal.from_bounds(im_lo, im_hi, prec))

    # region queries

    def is_finite(self) -> bool:
        return self.re.is_finite() and self.im.is_finite()

    def is_real(self) -> bool:
        """True when the imaginary part is exactly zero"""
        return self.im.is_exact_zero()

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def excludes_zero(self) -> bool:
        return not self.contains_zero()

    def contains(self, other: "BallComplex") -> bool:
        return self.re.contains(other.re) and self.im.contains(other.im)

    def contains_interior(self, other: "BallComplex") -> bool:
        return self.re.contains_interior(other.re) and self.im.contains_interior(other.im)

    def overlaps(self, other: "BallComplex") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def intersect(self, other: "BallComplex") -> "BallComplex | None":
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        if re is None or im is None:
            return None
        return BallComplex(re, im)

    def width(self):
        """The larger of the two component widths"""
        return max(self.re.width(), self.im.width())

    def point(self) -> "BallComplex":
        return BallComplex(self.re.point(), self.im.point())

    def with_prec(self, prec: int) -> "BallComplex":
        return BallComplex(self.re.with_prec(prec), self.im.with_prec(prec))

    def conjugate(self) -> "BallComplex":
        return BallComplex(self.re, -self.im)

    def abs_squared(self) -> BallReal:
        return self.re.square() + self.im.square()

    def modulus(self) -> BallReal:
        """|z| as a real ball"""
        if self.is_real():
            return abs(self.re)
        squared = self.abs_squared()
        from transcert.arith.functions import real_sqrt  # functions depends on this module

        return real_sqrt(squared)

    def __str__(self) -> str:
        return f"({self.re} + {self.im}i)"

    # endregion

    # region arithmetic

    def _coerce(self, other: "BallComplex | BallReal | Scalar") -> "BallComplex":
        if isinstance(other, BallComplex):
            return other
        if isinstance(other, BallReal):
            return BallComplex.from_real(other)
        if isinstance(other, (int, Fraction, mpq)):
            return BallComplex.from_real(BallReal.exact(other, self.prec))
        return NotImplemented

    def __neg__(self) -> "BallComplex":
        return BallComplex(-self.re, -self.im)

    def __pos__(self) -> "BallComplex":
        return self

    def __add__(self, other: "BallComplex | BallReal | Scalar") -> "BallComplex":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BallComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "BallComplex | BallReal | Scalar") -> "BallComplex":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BallComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "BallReal | Scalar") -> "BallComplex":
        return (-self) + other

    def __mul__(self, other: "BallComplex | BallReal | Scalar") -> "BallComplex":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_real():
            return BallComplex(self.re * other.re, self.im * other.re)
        if self.is_real():
            return BallComplex(self.re * other.re, self.re * other.im)
        a, b, c, d = self.re, self.im, other.re, other.im
        return BallComplex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: "BallComplex | BallReal | Scalar") -> "BallComplex":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_real():
            return BallComplex(self.re / other.re, self.im / other.re)
        denominator = other.abs_squared()
        if denominator.contains_zero():
            raise DivisorMayBeZero(f"Complex divisor {other} contains zero")
        a, b, c, d = self.re, self.im, other.re, other.im
        return BallComplex((a * c + b * d) / denominator, (b * c - a * d) / denominator)

    def __rtruediv__(self, other: "BallReal | Scalar") -> "BallComplex":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "BallComplex":
        if not isinstance(exponent, int):
            return NotImplemented
        return cpow_int(self, exponent)

    def square(self) -> "BallComplex":
        a, b = self.re, self.im
        return BallComplex(a.square() - b.square(), 2 * (a * b))

    # endregion


def cpow_int(base: BallComplex, n: int) -> BallComplex:
    """base^n by repeated squaring"""
    if n < 0:
        return BallComplex.exact(1, 0, base.prec) / cpow_int(base, -n)
    if n == 0:
        return BallComplex.exact(1, 0, base.prec)
    result: BallComplex | None = None
    square = base
    while n:
        if n & 1:
            result = square if result is None else result * square
        n >>= 1
        if n:
            square = square.square()
    assert result is not None
    return result
