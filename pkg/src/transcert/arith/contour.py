"""Rigorous winding numbers of a function around the boundary of a rectangle.

Each edge of the rectangle is cut into segments. A segment is evaluated as a single complex ball (the segment
is degenerate in one direction) and subdivided until its image lies entirely inside one of four open half planes
(Re > 0, Im > 0, Re < 0, Im < 0). Consecutive segments share an endpoint so their half planes are never
opposite and every label change is a quarter turn. Summing the quarter turns around the closed contour gives
4x the winding number of the image around 0 which, for a holomorphic function, is the number of zeros inside."""

import logging
from fractions import Fraction
from typing import Callable

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.error import ArithmeticFailure, BoundaryZero

logger = logging.getLogger(__name__)

ComplexFunction = Callable[[BallComplex, int], BallComplex]

INITIAL_SEGMENTS = 4
DEFAULT_SEGMENT_DEPTH = 24


def half_plane(value: BallComplex) -> int | None:
    """Index of the first open half plane containing every member of value or None if there isn't one"""
    if value.re.is_positive():
        return 0
    if value.im.is_positive():
        return 1
    if value.re.is_negative():
        return 2
    if value.im.is_negative():
        return 3
    return None


def _segment_ball(start: tuple[Fraction, Fraction], end: tuple[Fraction, Fraction], prec: int) -> BallComplex:
    return BallComplex(
        BallReal.from_bounds(min(start[0], end[0]), max(start[0], end[0]), prec),
        BallReal.from_bounds(min(start[1], end[1]), max(start[1], end[1]), prec),
    )


def _label_segment(
    fn: ComplexFunction,
    start: tuple[Fraction, Fraction],
    end: tuple[Fraction, Fraction],
    prec: int,
    depth: int,
    max_depth: int,
    rect: Rect,
    labels: list[int],
) -> None:
    """Appends (in order along the contour) the half plane labels for the segment start -> end"""
    failure: ArithmeticFailure | None = None
    label: int | None = None
    try:
        label = half_plane(fn(_segment_ball(start, end, prec), prec))
    except ArithmeticFailure as exc:
        failure = exc

    if label is not None:
        labels.append(label)
        return

    if depth >= max_depth:
        if failure is not None:
            raise failure
        raise BoundaryZero(rect)

    middle = ((start[0] + end[0]) / 2, (start[1] + end[1]) / 2)
    _label_segment(fn, start, middle, prec, depth + 1, max_depth, rect, labels)
    _label_segment(fn, middle, end, prec, depth + 1, max_depth, rect, labels)


def contour_labels(
    fn: ComplexFunction, rect: Rect, prec: int, max_depth: int = DEFAULT_SEGMENT_DEPTH
) -> list[int]:
    """Half plane labels for the counterclockwise boundary of rect"""
    corners = [
        (rect.re_lo, rect.im_lo),
        (rect.re_hi, rect.im_lo),
        (rect.re_hi, rect.im_hi),
        (rect.re_lo, rect.im_hi),
    ]
    labels: list[int] = []
    for i, start in enumerate(corners):
        end = corners[(i + 1) % 4]
        for k in range(INITIAL_SEGMENTS):
            a = (
                start[0] + (end[0] - start[0]) * Fraction(k, INITIAL_SEGMENTS),
                start[1] + (end[1] - start[1]) * Fraction(k, INITIAL_SEGMENTS),
            )
            b = (
                start[0] + (end[0] - start[0]) * Fraction(k + 1, INITIAL_SEGMENTS),
                start[1] + (end[1] - start[1]) * Fraction(k + 1, INITIAL_SEGMENTS),
            )
            _label_segment(fn, a, b, prec, 0, max_depth, rect, labels)
    return labels


def winding_from_labels(labels: list[int]) -> int:
    quarter_turns = 0
    for i, label in enumerate(labels):
        step = (labels[(i + 1) % len(labels)] - label) % 4
        if step == 1:
            quarter_turns += 1
        elif step == 3:
            quarter_turns -= 1
        elif step == 2:
            raise ArithmeticFailure("Adjacent contour segments landed in opposite half planes")
    if quarter_turns % 4 != 0:
        raise ArithmeticFailure(f"Contour quarter turns {quarter_turns} don't close up")
    return quarter_turns // 4


def count_zeros(fn: ComplexFunction, rect: Rect, prec: int, max_depth: int = DEFAULT_SEGMENT_DEPTH) -> int:
    """The winding number of fn around the boundary of rect. fn is called with a ball and a precision and must
    return a ball enclosing its image. Raises BoundaryZero if some part of the boundary can't be separated from
    0 within max_depth bisections (ArithmeticFailures raised by fn propagate the same way)."""
    labels = contour_labels(fn, rect, prec, max_depth)
    winding = winding_from_labels(labels)
    logger.debug(f"Winding number {winding} around {rect} ({len(labels)} segments)")
    return winding
