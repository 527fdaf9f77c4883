"""Certified isolation of every real root of h(x) = 0 on a closed interval.

The interval is bisected (off centre) and each piece is either discarded (h excludes 0 on it), proven to hold a
single root (by a monotone sign change or an interval Newton contraction) or split again. Pieces still open at the
depth limit are retried at doubled precision. Roots found are tightened until they sit strictly inside their piece
so that enclosures are pairwise disjoint."""

import logging
from dataclasses import dataclass
from enum import StrEnum, auto

from transcert.arith.newton import newton_step, refine_box
from transcert.arith.real import BallReal
from transcert.arith.region import Interval
from transcert.error import ArithmeticFailure, UndecidedError
from transcert.expr.derivative import differentiate
from transcert.expr.tree import Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.common import RealFunction, branch_of, real_function
from transcert.rootfind.model import RootEnclosure, UniquenessProof, sort_roots

logger = logging.getLogger(__name__)

TIGHTEN_START_BITS = 16


class PieceStatus(StrEnum):
    EXCLUDED = auto()  # No root in the piece
    UNIQUE = auto()  # Exactly one root in the piece
    OPEN = auto()  # Undecided at this precision - split further


@dataclass(frozen=True)
class PieceOutcome:
    status: PieceStatus
    box: BallReal | None = None  # Set when UNIQUE: encloses the root
    proof: UniquenessProof | None = None


def _sign_change(fn: RealFunction, piece: Interval, prec: int) -> bool | None:
    """True/False if the endpoint values have opposite/equal signs. None if a sign is undecided"""
    lo = fn(BallReal.exact(piece.lo, prec), prec)
    hi = fn(BallReal.exact(piece.hi, prec), prec)
    if lo.contains_zero() or hi.contains_zero():
        return None
    return lo.is_positive() != hi.is_positive()


def examine_piece(fn: RealFunction, dfn: RealFunction, piece: Interval, prec: int) -> PieceOutcome:
    """Decides (if possible at prec) how many roots of fn lie in piece"""
    ball = piece.ball(prec)
    try:
        value = fn(ball, prec)
    except ArithmeticFailure as exc:
        logger.debug(f"Unable to evaluate over {piece}: {exc}")
        return PieceOutcome(PieceStatus.OPEN)
    if value.excludes_zero():
        return PieceOutcome(PieceStatus.EXCLUDED)

    try:
        slope = dfn(ball, prec)
    except ArithmeticFailure:
        slope = None

    if slope is not None and slope.excludes_zero():
        # fn is strictly monotone on the piece
        try:
            changes = _sign_change(fn, piece, prec)
        except ArithmeticFailure:
            changes = None
        if changes is False:
            return PieceOutcome(PieceStatus.EXCLUDED)
        if changes is True:
            return PieceOutcome(PieceStatus.UNIQUE, ball, UniquenessProof.SIGN_CHANGE_MONOTONE)

    step = newton_step(fn, dfn, ball, prec)
    if step is None:
        return PieceOutcome(PieceStatus.OPEN)
    if step.box is None:
        return PieceOutcome(PieceStatus.EXCLUDED)
    if step.contracted and piece.contains_ball(step.box, strict=True):
        return PieceOutcome(PieceStatus.UNIQUE, step.box, UniquenessProof.NEWTON_CONTRACTION)
    return PieceOutcome(PieceStatus.OPEN)


def _tighten(fn: RealFunction, dfn: RealFunction, box: BallReal, piece: Interval, budget: Budget) -> BallReal | None:
    """Refines box (holding exactly one root) until it sits strictly inside piece. None if the budget runs out"""
    target = TIGHTEN_START_BITS
    while not piece.contains_ball(box, strict=True):
        if target > budget.max_prec:
            return None
        try:
            box = refine_box(fn, dfn, box, target, budget.max_prec, budget.newton_iterations).box
        except (UndecidedError, ArithmeticFailure) as exc:
            logger.debug(f"Unable to tighten {box} inside {piece}: {exc}")
            return None
        target *= 2
    return box


def isolate_real_roots(
    h: Expr, interval: Interval, prec: int | None = None, budget: Budget = DEFAULT_BUDGET
) -> list[RootEnclosure]:
    """Every root of h in the closed interval, each in its own pairwise disjoint enclosure (sorted ascending).

    Raises UndecidedError (listing the unresolved pieces and the roots found so far) if some piece can neither be
    excluded nor proven to hold exactly one root within budget (eg: a multiple root)."""
    fn = real_function(h)
    dfn = real_function(differentiate(h))
    branch = branch_of(h)
    prec = max(prec or budget.start_prec, budget.start_prec)

    found: list[RootEnclosure] = []
    pending: list[Interval] = [interval]
    while True:
        open_pieces: list[Interval] = []
        stack: list[tuple[Interval, int]] = [(piece, 0) for piece in reversed(pending)]
        while stack:
            piece, depth = stack.pop()
            outcome = examine_piece(fn, dfn, piece, prec)
            if outcome.status == PieceStatus.EXCLUDED:
                continue

            if outcome.status == PieceStatus.UNIQUE and outcome.box is not None and outcome.proof is not None:
                box = _tighten(fn, dfn, outcome.box, piece, budget)
                if box is None:
                    open_pieces.append(piece)
                else:
                    logger.debug(f"Root isolated in {piece} by {outcome.proof}: {box}")
                    found.append(RootEnclosure(box, outcome.proof, prec, branch))
                continue

            if depth >= budget.real_depth:
                open_pieces.append(piece)
                continue
            left, right = piece.bisect()
            stack.append((right, depth + 1))
            stack.append((left, depth + 1))

        if not open_pieces:
            break
        if prec * 2 > budget.max_prec:
            logger.warning(f"Real isolation of {interval} left {len(open_pieces)} piece(s) undecided at {prec} bits")
            raise UndecidedError(
                f"{len(open_pieces)} piece(s) of {interval} undecided at {prec} bits",
                regions=[str(piece) for piece in open_pieces],
                found=sort_roots(found),
            )
        prec *= 2
        logger.debug(f"Retrying {len(open_pieces)} undecided piece(s) at {prec} bits")
        pending = open_pieces

    roots = sort_roots(found)
    logger.info(f"Isolated {len(roots)} real root(s) of h in {interval}")
    return roots
