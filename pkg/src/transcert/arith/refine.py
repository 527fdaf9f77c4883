import logging
from dataclasses import dataclass
from enum import StrEnum, auto
from typing import Callable, Union

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.error import ArithmeticFailure

logger = logging.getLogger(__name__)

DEFAULT_REFINE_DOUBLINGS = 16
DEFAULT_MAX_BITS = 2**20

Refiner = Callable[[int], Union[BallReal, BallComplex]]


class NonzeroStatus(StrEnum):
    NONZERO = "Nonzero"
    ZERO = "Zero"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class NonzeroWitness:
    status: NonzeroStatus
    prec: int  # The precision at which the decision was made (or the last precision tried)


def refine_nonzero(
    value: BallReal | BallComplex,
    refiner: Refiner,
    budget: int = DEFAULT_REFINE_DOUBLINGS,
    max_bits: int = DEFAULT_MAX_BITS,
) -> NonzeroWitness:
    """Decides whether the quantity enclosed by value is nonzero by repeatedly doubling the working precision and
    asking refiner for a tighter enclosure. Zero is only ever reported for an exactly zero input ball - a nonzero
    quantity is always eventually Nonzero, an actual zero stays Undecided."""
    if isinstance(value, BallComplex):
        if value.re.is_exact_zero() and value.im.is_exact_zero():
            return NonzeroWitness(NonzeroStatus.ZERO, value.prec)
    elif value.is_exact_zero():
        return NonzeroWitness(NonzeroStatus.ZERO, value.prec)

    prec = value.prec
    if value.excludes_zero():
        return NonzeroWitness(NonzeroStatus.NONZERO, prec)

    for _ in range(budget):
        if prec * 2 > max_bits:
            break
        prec *= 2
        try:
            refined = refiner(prec)
        except ArithmeticFailure as exc:
            logger.debug(f"Refinement at {prec} bits failed: {exc}")
            continue
        if refined.excludes_zero():
            return NonzeroWitness(NonzeroStatus.NONZERO, prec)

    logger.debug(f"Unable to separate value from zero after refining to {prec} bits")
    return NonzeroWitness(NonzeroStatus.UNDECIDED, prec)
