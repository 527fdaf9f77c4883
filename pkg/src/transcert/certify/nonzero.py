"""Hypothesis checks of the form "q(root) != 0" decided by refining the root enclosure and re-evaluating q"""

import logging
from typing import Callable

from transcert.arith.complex import BallComplex
from transcert.arith.functions import Ball
from transcert.arith.real import BallReal
from transcert.arith.refine import NonzeroStatus, refine_nonzero
from transcert.certify.model import Check, CheckStatus
from transcert.error import ArithmeticFailure, UndecidedError
from transcert.expr.tree import Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.model import RootEnclosure
from transcert.rootfind.newton import refine_root

logger = logging.getLogger(__name__)

Quantity = Callable[[Ball, int], Ball]  # (root box, prec) -> enclosure of some quantity at the root

_STATUS_FOR: dict[NonzeroStatus, CheckStatus] = {
    NonzeroStatus.NONZERO: CheckStatus.PASS,
    NonzeroStatus.ZERO: CheckStatus.FAIL,
    NonzeroStatus.UNDECIDED: CheckStatus.UNDECIDED,
}


class RootRefiner:
    """Hands out enclosures of a single root at increasing precision, remembering the tightest one so far"""

    def __init__(self, h: Expr, root: RootEnclosure, budget: Budget = DEFAULT_BUDGET) -> None:
        self.h = h
        self.root = root
        self.budget = budget
        self._best = root
        self._failed_at: int | None = None

    @property
    def start_prec(self) -> int:
        return max(self.root.prec_used, self.budget.start_prec)

    def box_at(self, prec: int) -> BallReal | BallComplex:
        """An enclosure of the root roughly 2^-prec wide (or the best available if refinement stalls)"""
        if self._failed_at is not None and prec >= self._failed_at:
            return self._best.box
        if self._best.width() <= 0:
            return self._best.box
        try:
            self._best = refine_root(self.h, self._best, prec, self.budget)
        except (UndecidedError, ArithmeticFailure) as exc:
            logger.debug(f"Root refinement stalled at {prec} bits: {exc}")
            self._failed_at = prec
        return self._best.box


def evaluate_at_root(quantity: Quantity, refiner: RootRefiner, prec: int) -> Ball:
    return quantity(refiner.box_at(prec), prec)


def nonzero_check(name: str, quantity: Quantity, refiner: RootRefiner) -> Check:
    """Decides whether quantity(root) != 0. A quantity that is identically (exactly) zero fails, one that can't
    be separated from zero within budget is Undecided."""
    prec = refiner.start_prec
    try:
        value = evaluate_at_root(quantity, refiner, prec)
    except ArithmeticFailure as exc:
        logger.debug(f"{name}: initial evaluation failed ({exc})")
        value = BallReal.whole(prec)

    witness = refine_nonzero(
        value,
        lambda p: evaluate_at_root(quantity, refiner, p),
        budget=refiner.budget.refine_doublings,
        max_bits=refiner.budget.max_prec,
    )
    status = _STATUS_FOR[witness.status]
    detail = None
    if status == CheckStatus.FAIL:
        detail = "the quantity is exactly zero"
    elif status == CheckStatus.UNDECIDED:
        detail = f"couldn't separate the quantity from zero by {witness.prec} bits"
    logger.debug(f"{name}: {status} at {witness.prec} bits")
    return Check(name, status, witness.prec, detail)


def all_nonzero_check(name: str, quantities: list[Quantity], refiner: RootRefiner) -> Check:
    """Every quantity nonzero. Fails on the first definite zero, otherwise reports the weakest status"""
    results = [nonzero_check(name, q, refiner) for q in quantities]
    for result in results:
        if result.status == CheckStatus.FAIL:
            return result
    undecided = [r for r in results if r.status == CheckStatus.UNDECIDED]
    if undecided:
        return undecided[0]
    precs = [r.witness_prec for r in results if r.witness_prec is not None]
    return Check(name, CheckStatus.PASS, max(precs) if precs else None)


def any_nonzero_check(name: str, groups: list[list[Quantity]], refiner: RootRefiner) -> Check:
    """Some group has every quantity nonzero"""
    undecided: Check | None = None
    for group in groups:
        result = all_nonzero_check(name, group, refiner)
        if result.status == CheckStatus.PASS:
            return result
        if result.status == CheckStatus.UNDECIDED and undecided is None:
            undecided = result
    if undecided is not None:
        return undecided
    return Check(name, CheckStatus.FAIL, refiner.start_prec, "every candidate has a zero factor")


def structural_check(name: str, holds: bool | None, detail: str | None = None) -> Check:
    """A hypothesis decided exactly (None meaning it can't be decided)"""
    if holds is None:
        return Check(name, CheckStatus.UNDECIDED, None, detail)
    return Check(name, CheckStatus.PASS if holds else CheckStatus.FAIL, None, None if holds else detail)


def root_value(z: Ball, prec: int) -> Ball:
    return z
