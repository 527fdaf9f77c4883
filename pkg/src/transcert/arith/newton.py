"""Interval Newton iteration on ball valued callables.

N(X) = m - f(m) / f'(X) for the midpoint m of X. Any zero of f in X lies in N(X) and if N(X) sits strictly
inside X then X holds exactly one zero. When a step can't be taken (f'(X) may vanish) or doesn't make progress
the box is halved instead: by sign for real boxes, by winding number for complex ones."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, TypeVar

from gmpy2 import mpfr

from transcert.arith.complex import BallComplex
from transcert.arith.contour import count_zeros
from transcert.arith.real import BallReal
from transcert.arith.region import SPLIT_RATIO, Interval, Rect
from transcert.arith.rounding import rad_up, to_fraction
from transcert.error import ArithmeticFailure, BoundaryZero, UndecidedError

logger = logging.getLogger(__name__)

BallT = TypeVar("BallT", BallReal, BallComplex)

DEFAULT_ITERATIONS = 64
PROGRESS_FACTOR = Fraction(3, 4)  # A step that doesn't shrink the box at least this much counts as a stall
GUARD_BITS = 30

# Alternative split points tried when a complex split lands on a zero
_ALTERNATE_SPLITS = [
    (SPLIT_RATIO, SPLIT_RATIO),
    (Fraction(61, 128), Fraction(67, 128)),
    (Fraction(71, 128), Fraction(59, 128)),
    (Fraction(57, 128), Fraction(73, 128)),
]


@dataclass(frozen=True)
class NewtonStep(Generic[BallT]):
    box: BallT | None  # N(X) intersected with X. None if the intersection is empty (X holds no zero)
    contracted: bool  # True if N(X) sits strictly inside X


@dataclass(frozen=True)
class Refinement(Generic[BallT]):
    box: BallT
    prec: int  # Working precision used for the final step
    contracted: bool  # True if the final Newton step was a strict contraction


def box_width(box: BallReal | BallComplex) -> mpfr:
    return box.width()


def working_prec(box: BallReal | BallComplex, target_bits: int) -> int:
    """target + guard + however many bits sit in front of the binary point"""
    if isinstance(box, BallComplex):
        magnitude = max(box.re.magnitude(), box.im.magnitude())
    else:
        magnitude = box.magnitude()
    leading = int(magnitude).bit_length() if magnitude >= 1 else 0
    return target_bits + GUARD_BITS + leading


def newton_step(
    fn: Callable[[BallT, int], BallT], dfn: Callable[[BallT, int], BallT], box: BallT, prec: int
) -> NewtonStep[BallT] | None:
    """One interval Newton step at prec. Returns None if the step can't be taken"""
    box = box.with_prec(prec)
    m = box.point()
    try:
        derivative = dfn(box, prec)
        newton = m - fn(m, prec) / derivative
    except ArithmeticFailure as exc:
        logger.debug(f"Newton step over {box} not possible: {exc}")
        return None
    return NewtonStep(box=newton.intersect(box), contracted=box.contains_interior(newton))


def _within_target(box: BallReal | BallComplex, target_bits: int) -> bool:
    with rad_up():
        return box_width(box) * (mpfr(2) ** target_bits) <= 1


def _bisect_real(fn: Callable[[BallReal, int], BallReal], box: BallReal, prec: int) -> BallReal | None:
    """Halves box keeping the half whose endpoints show a sign change. None if a sign can't be decided"""
    lo_point, hi_point = box.with_prec(prec).endpoints()
    m = box.with_prec(prec).point()
    try:
        f_lo = fn(lo_point, prec)
        f_m = fn(m, prec)
    except ArithmeticFailure:
        return None
    if f_lo.contains_zero() or f_m.contains_zero():
        return None
    if f_lo.is_positive() == f_m.is_positive():
        return BallReal.from_bounds(m.mid, hi_point.mid, prec)
    return BallReal.from_bounds(lo_point.mid, m.mid, prec)


def _zoom_complex(
    fn: Callable[[BallComplex, int], BallComplex], box: BallComplex, prec: int, segment_depth: int
) -> BallComplex | None:
    """Quadrisects box (which must hold exactly one zero) and returns the child with winding number 1"""
    try:
        rect = Rect.from_ball(box)
    except ValueError:
        return None
    for ratio in _ALTERNATE_SPLITS:
        try:
            for child in rect.quadrisect(ratio):
                if count_zeros(fn, child, prec, segment_depth) == 1:
                    return child.ball(prec)
            return None
        except BoundaryZero:
            logger.debug(f"Split of {rect} at {ratio} touched a zero. Trying another split.")
            continue
        except ArithmeticFailure:
            return None
    return None


def refine_box(
    fn: Callable[[BallT, int], BallT],
    dfn: Callable[[BallT, int], BallT],
    box: BallT,
    target_bits: int,
    max_prec: int,
    iterations: int = DEFAULT_ITERATIONS,
    segment_depth: int = 24,
) -> Refinement[BallT]:
    """Shrinks box (which must hold exactly one zero of fn) until its width is at most 2^-target_bits.
    Raises UndecidedError if that can't be achieved without exceeding max_prec."""
    prec = max(working_prec(box, target_bits), box.prec)
    contracted = False
    for _ in range(iterations):
        if _within_target(box, target_bits):
            return Refinement(box=box, prec=prec, contracted=contracted)

        step = newton_step(fn, dfn, box, prec)
        if step is not None and step.box is None:
            raise ArithmeticFailure(f"Newton step excluded every point of {box}")

        if step is not None and box_fraction_width(step.box) <= box_fraction_width(box) * PROGRESS_FACTOR:
            box, contracted = step.box, step.contracted
            continue

        if step is not None and box_fraction_width(box) < Fraction(1, 2 ** (prec // 2)):
            # Narrow box that stopped shrinking: the working precision is the limit
            prec *= 2
            if prec > max_prec:
                break
            continue

        # Couldn't step (or a wide box is shrinking slowly) - fall back to halving
        halved: BallT | None
        if isinstance(box, BallComplex):
            halved = _zoom_complex(fn, box, prec, segment_depth)
        else:
            halved = _bisect_real(fn, box, prec)
        if halved is not None:
            box, contracted = halved, False
            continue

        prec *= 2
        if prec > max_prec:
            break
        logger.debug(f"Raising working precision to {prec} bits while refining {box}")

    if _within_target(box, target_bits):
        return Refinement(box=box, prec=prec, contracted=contracted)
    raise UndecidedError(
        f"Unable to refine {box} to 2^-{target_bits} within {max_prec} bits",
        regions=[str(Interval.from_ball(box) if isinstance(box, BallReal) else Rect.from_ball(box))],
    )


def box_fraction_width(box: BallReal | BallComplex) -> Fraction:
    return to_fraction(box_width(box))
