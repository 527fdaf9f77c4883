from fractions import Fraction

import pytest

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.error import DivisorMayBeZero


def _contains(ball: BallComplex, re, im) -> bool:
    return ball.re.contains(re) and ball.im.contains(im)


@pytest.mark.parametrize(
    "a, b",
    [
        ((1, 2), (3, -4)),
        ((Fraction(1, 3), Fraction(-1, 7)), (Fraction(2, 5), Fraction(9, 11))),
        ((-2, 0), (0, 1)),
    ],
)
def test_field_operations(a: tuple, b: tuple):
    za, zb = complex(*map(float, a)), complex(*map(float, b))
    x = BallComplex.exact(a[0], a[1], 64)
    y = BallComplex.exact(b[0], b[1], 64)

    re_a, im_a = map(Fraction, a)
    re_b, im_b = map(Fraction, b)
    assert _contains(x + y, re_a + re_b, im_a + im_b)
    assert _contains(x - y, re_a - re_b, im_a - im_b)
    assert _contains(x * y, re_a * re_b - im_a * im_b, re_a * im_b + im_a * re_b)

    denominator = re_b**2 + im_b**2
    assert _contains(
        x / y, (re_a * re_b + im_a * im_b) / denominator, (im_a * re_b - re_a * im_b) / denominator
    )
    assert abs(complex(float((x / y).re), float((x / y).im)) - za / zb) < 1e-12


def test_real_embedding():
    z = BallComplex.from_real(BallReal.exact(5, 64))
    assert z.is_real()
    assert z.im.is_exact_zero()
    assert (z * 2).re.contains(10)
    assert (3 - z).re.contains(-2)


def test_divide_by_zero_ball():
    with pytest.raises(DivisorMayBeZero):
        BallComplex.exact(1, 1, 64) / BallComplex.from_bounds(-1, 1, -1, 1, 64)


def test_pow_and_square():
    i = BallComplex.exact(0, 1, 64)
    assert _contains(i**2, -1, 0)
    assert _contains(i**4, 1, 0)
    assert _contains(i.square(), -1, 0)
    assert _contains(BallComplex.exact(1, 1, 64) ** -2, 0, Fraction(-1, 2))


def test_modulus():
    assert BallComplex.exact(3, 4, 64).modulus().contains(5)
    assert BallComplex.exact(-3, 0, 64).modulus().contains(3)
    assert BallComplex.exact(1, 1, 64).abs_squared().contains(2)


def test_zero_queries():
    assert BallComplex.from_bounds(-1, 1, -1, 1, 64).contains_zero()
    # Only one component needs to exclude zero
    assert BallComplex.from_bounds(-1, 1, 1, 2, 64).excludes_zero()
    assert BallComplex.from_bounds(1, 2, -1, 1, 64).excludes_zero()


def test_containment():
    outer = BallComplex.from_bounds(0, 4, 0, 4, 64)
    inner = BallComplex.from_bounds(1, 2, 1, 2, 64)
    assert outer.contains(inner)
    assert outer.contains_interior(inner)
    assert not inner.contains(outer)
    assert outer.overlaps(inner)

    both = outer.intersect(BallComplex.from_bounds(3, 5, 3, 5, 64))
    assert both is not None
    assert _contains(both, Fraction(7, 2), 4)
    assert outer.intersect(BallComplex.from_bounds(5, 6, 0, 1, 64)) is None


def test_conjugate_and_str():
    z = BallComplex.exact(1, -2, 64)
    assert _contains(z.conjugate(), 1, 2)
    assert str(z).startswith("([1 +/- ")
    assert str(z).endswith("]i)")
