"""Exact algebraic coefficients.

Three representations are supported:
  Rational  - a Fraction
  Surd      - a + b*sqrt(d) with rational a, b and squarefree integer d > 1
  PolyRoot  - the unique root of an integer polynomial inside an isolating rectangle

Arithmetic is closed for Rational and for Surds sharing the same d. Anything else raises NotRepresentable."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import gmpy2

from transcert.arith.complex import BallComplex
from transcert.arith.contour import count_zeros
from transcert.arith.functions import real_sqrt
from transcert.arith.newton import refine_box
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.constants import DEFAULT_PREC
from transcert.error import NotRepresentable, RejectedAlgebraic, TranscertError

FACTOR_BOUND = 10**6  # Trial division bound used when extracting square factors
POLY_ROOT_MAX_PREC = 2**16


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class Surd:
    """a + b*sqrt(d) - always constructed via make_surd so that b != 0 and d is squarefree"""

    a: Fraction
    b: Fraction
    d: int


@dataclass(frozen=True)
class PolyRoot:
    """The unique root of sum(coefficients[k] * x^k) inside box"""

    coefficients: tuple[int, ...]
    box: Rect

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


AlgebraicNumber = Union[Rational, Surd, PolyRoot]

ZERO = Rational(Fraction(0))
ONE = Rational(Fraction(1))


def rational(value: int | Fraction) -> Rational:
    return Rational(Fraction(value))


# region squarefree surds


def squarefree_split(n: int) -> tuple[int, int]:
    """Writes n > 0 as s^2 * d returning (s, d). d is squarefree unless n has a repeated prime factor above
    FACTOR_BOUND that isn't absorbed by the final perfect square test."""
    if n <= 0:
        raise ValueError(f"squarefree_split requires n > 0, got {n}")
    s = 1
    d = 1
    remaining = gmpy2.mpz(n)
    p = 2
    while p * p <= remaining and p <= FACTOR_BOUND:
        while remaining % (p * p) == 0:
            remaining //= p * p
            s *= p
        if remaining % p == 0:
            remaining //= p
            d *= p
        p += 1 if p == 2 else 2
    if remaining > 1 and gmpy2.is_square(remaining):
        s *= int(gmpy2.isqrt(remaining))
        remaining = gmpy2.mpz(1)
    return s, d * int(remaining)


def make_surd(a: Fraction, b: Fraction, d: int) -> AlgebraicNumber:
    """a + b*sqrt(d) normalised (d > 0 any integer)"""
    if d < 0:
        raise NotRepresentable(f"sqrt({d}) isn't real")
    if b == 0 or d == 0:
        return Rational(Fraction(a))
    s, core = squarefree_split(d)
    if core == 1:
        return Rational(Fraction(a) + Fraction(b) * s)
    return Surd(Fraction(a), Fraction(b) * s, core)


def sqrt_rational(q: Fraction) -> AlgebraicNumber:
    """sqrt(q) for rational q >= 0 as a Rational or Surd"""
    if q < 0:
        raise NotRepresentable(f"sqrt({q}) isn't real")
    # sqrt(p/r) = sqrt(p*r) / r
    return make_surd(Fraction(0), Fraction(1, q.denominator), q.numerator * q.denominator)


# endregion

# region queries


def is_zero(value: AlgebraicNumber) -> bool:
    # Surds are never zero (d isn't a square) and neither are PolyRoots (0 would be a rational root)
    return isinstance(value, Rational) and value.value == 0


def is_one(value: AlgebraicNumber) -> bool:
    return isinstance(value, Rational) and value.value == 1


def is_irrational(value: AlgebraicNumber) -> bool:
    """Decidable for every supported representation"""
    return not isinstance(value, Rational)


def as_integer(value: AlgebraicNumber) -> int | None:
    if isinstance(value, Rational) and value.value.denominator == 1:
        return value.value.numerator
    return None


def is_real(value: AlgebraicNumber) -> bool:
    if isinstance(value, PolyRoot):
        return value.box.is_symmetric_about_real_axis()
    return True


# endregion

# region arithmetic


def _parts(value: AlgebraicNumber) -> tuple[Fraction, Fraction, int]:
    if isinstance(value, Rational):
        return value.value, Fraction(0), 0
    if isinstance(value, Surd):
        return value.a, value.b, value.d
    raise NotRepresentable("Arithmetic on polynomial roots isn't supported")


def _common_d(d1: int, d2: int) -> int:
    if d1 and d2 and d1 != d2:
        raise NotRepresentable(f"sqrt({d1}) and sqrt({d2}) don't share a quadratic field")
    return d1 or d2


def negate(value: AlgebraicNumber) -> AlgebraicNumber:
    if isinstance(value, PolyRoot):
        flipped = tuple(c if k % 2 == 0 else -c for k, c in enumerate(value.coefficients))
        return PolyRoot(flipped, _negate_rect(value.box))
    a, b, d = _parts(value)
    return make_surd(-a, -b, d) if d else Rational(-a)


def _negate_rect(rect: Rect) -> Rect:
    return Rect(-rect.re_hi, -rect.re_lo, -rect.im_hi, -rect.im_lo)


def add(x: AlgebraicNumber, y: AlgebraicNumber) -> AlgebraicNumber:
    if is_zero(x):
        return y
    if is_zero(y):
        return x
    a1, b1, d1 = _parts(x)
    a2, b2, d2 = _parts(y)
    d = _common_d(d1, d2)
    return make_surd(a1 + a2, b1 + b2, d) if d else Rational(a1 + a2)


def sub(x: AlgebraicNumber, y: AlgebraicNumber) -> AlgebraicNumber:
    return add(x, negate(y))


def mul(x: AlgebraicNumber, y: AlgebraicNumber) -> AlgebraicNumber:
    if is_one(x):
        return y
    if is_one(y):
        return x
    if is_zero(x) or is_zero(y):
        return ZERO
    a1, b1, d1 = _parts(x)
    a2, b2, d2 = _parts(y)
    d = _common_d(d1, d2)
    if not d:
        return Rational(a1 * a2)
    return make_surd(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d)


def inverse(x: AlgebraicNumber) -> AlgebraicNumber:
    if is_zero(x):
        raise ZeroDivisionError("Inverse of zero")
    a, b, d = _parts(x)
    if not d:
        return Rational(1 / a)
    norm = a * a - b * b * d  # nonzero as d isn't a square
    return make_surd(a / norm, -b / norm, d)


def div(x: AlgebraicNumber, y: AlgebraicNumber) -> AlgebraicNumber:
    if is_one(y):
        return x
    return mul(x, inverse(y))


def power(x: AlgebraicNumber, n: int) -> AlgebraicNumber:
    if n < 0:
        return power(inverse(x), -n)
    result: AlgebraicNumber = ONE
    base = x
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


# endregion

# region polynomial roots


def _horner(coefficients: Sequence[int], z: BallReal | BallComplex, prec: int) -> BallReal | BallComplex:
    result: BallReal | BallComplex = BallReal.exact(coefficients[-1], prec)
    for c in reversed(coefficients[:-1]):
        result = result * z + c
    return result


def _derivative(coefficients: Sequence[int]) -> tuple[int, ...]:
    return tuple(k * c for k, c in enumerate(coefficients))[1:] or (0,)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, int(gmpy2.isqrt(n)) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def rational_roots(coefficients: Sequence[int]) -> list[Fraction]:
    """Every rational root of an integer polynomial (rational root theorem)"""
    coefficients = list(coefficients)
    roots: list[Fraction] = []
    while coefficients and coefficients[0] == 0:
        roots.append(Fraction(0))
        coefficients.pop(0)
    if len(coefficients) < 2:
        return sorted(set(roots))
    for p in _divisors(coefficients[0]):
        for q in _divisors(coefficients[-1]):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                value = Fraction(0)
                for c in reversed(coefficients):
                    value = value * candidate + c
                if value == 0:
                    roots.append(candidate)
    return sorted(set(roots))


def make_poly_root(coefficients: Sequence[int], box: Rect, prec: int = DEFAULT_PREC) -> PolyRoot:
    """Validates that coefficients has exactly one root inside box and that root is irrational"""
    trimmed = list(coefficients)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    if len(trimmed) < 2:
        raise RejectedAlgebraic(f"Polynomial {coefficients} has no roots to isolate")

    for root in rational_roots(trimmed):
        if box.re_lo <= root <= box.re_hi and box.im_lo <= 0 <= box.im_hi:
            raise RejectedAlgebraic(f"Polynomial has the rational root {root} inside {box}")

    def poly(z: BallComplex, p: int) -> BallComplex:
        return _horner(trimmed, z, p)

    try:
        winding = count_zeros(poly, box, prec)
    except TranscertError as exc:
        raise RejectedAlgebraic(f"Unable to isolate a root of {trimmed} in {box}: {exc}") from exc
    if winding != 1:
        raise RejectedAlgebraic(f"{box} holds {winding} roots of {trimmed} (expected exactly 1)")
    return PolyRoot(tuple(trimmed), box)


@lru_cache(maxsize=256)
def _poly_root_enclosure(coefficients: tuple[int, ...], box: Rect, prec: int) -> BallComplex:
    derivative = _derivative(coefficients)
    refined = refine_box(
        lambda z, p: _horner(coefficients, z, p),
        lambda z, p: _horner(derivative, z, p),
        box.ball(prec),
        target_bits=prec,
        max_prec=max(POLY_ROOT_MAX_PREC, 4 * prec),
    )
    return refined.box


# endregion


def enclosure(value: AlgebraicNumber, prec: int) -> BallReal | BallComplex:
    """A ball at prec enclosing value"""
    if isinstance(value, Rational):
        return BallReal.exact(value.value, prec)
    if isinstance(value, Surd):
        return BallReal.exact(value.a, prec) + BallReal.exact(value.b, prec) * real_sqrt(
            BallReal.exact(value.d, prec)
        )
    root = _poly_root_enclosure(value.coefficients, value.box, prec)
    if is_real(value):
        # A conjugate symmetric isolating box can only hold a real root
        return root.re
    return root


def algebraic_equal(x: AlgebraicNumber, y: AlgebraicNumber, prec: int = DEFAULT_PREC) -> bool | None:
    """Exact equality where decidable. None if polynomial root enclosures can't be separated"""
    if not isinstance(x, PolyRoot) and not isinstance(y, PolyRoot):
        return x == y
    if x == y:
        return True
    for bits in (prec, 2 * prec, 4 * prec, 8 * prec):
        ex, ey = enclosure(x, bits), enclosure(y, bits)
        ex_c = ex if isinstance(ex, BallComplex) else BallComplex.from_real(ex)
        ey_c = ey if isinstance(ey, BallComplex) else BallComplex.from_real(ey)
        if not ex_c.overlaps(ey_c):
            return False
    return None


# region rendering


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _poly_text(coefficients: Sequence[int]) -> str:
    terms = []
    for k in range(len(coefficients) - 1, -1, -1):
        c = coefficients[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            monomial = "x" if k == 1 else f"x^{k}"
            terms.append(monomial if c == 1 else f"{c}*{monomial}")
    return " + ".join(terms).replace("+ -", "- ")


def to_text(value: AlgebraicNumber) -> str:
    """Human readable (and for Rational / Surd, parseable) rendering"""
    if isinstance(value, Rational):
        return _fraction_text(value.value)
    if isinstance(value, Surd):
        surd = f"sqrt({value.d})" if value.b == 1 else f"{_fraction_text(value.b)}*sqrt({value.d})"
        if value.a == 0:
            return surd
        return f"{_fraction_text(value.a)} + {surd}"
    return f"root({_poly_text(value.coefficients)} in {value.box})"


def to_json(value: AlgebraicNumber) -> dict:
    if isinstance(value, Rational):
        return {"kind": "rational", "value": _fraction_text(value.value)}
    if isinstance(value, Surd):
        return {"kind": "surd", "a": _fraction_text(value.a), "b": _fraction_text(value.b), "d": value.d}
    return {
        "kind": "poly_root",
        "coefficients": list(value.coefficients),
        "box": [_fraction_text(v) for v in (value.box.re_lo, value.box.re_hi, value.box.im_lo, value.box.im_hi)],
    }


# endregion
