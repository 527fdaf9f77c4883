import logging

from transcert.arith.complex import BallComplex
from transcert.arith.contour import count_zeros
from transcert.arith.newton import newton_step, refine_box, working_prec
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.error import ArithmeticFailure, BoundaryZero
from transcert.expr.derivative import differentiate
from transcert.expr.tree import Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.common import complex_function, real_function
from transcert.rootfind.model import RootEnclosure, UniquenessProof

logger = logging.getLogger(__name__)


def refine_root(h: Expr, enc: RootEnclosure, target_prec: int, budget: Budget = DEFAULT_BUDGET) -> RootEnclosure:
    """Shrinks enc until its width is at most 2^-target_prec. An enclosure that is already narrow enough is
    returned unchanged. Raises UndecidedError if Newton iteration can't get there within budget."""
    dh = differentiate(h)
    # Digit extraction may legitimately ask for more bits than the solver budget
    max_prec = max(budget.max_prec, 2 * working_prec(enc.box, target_prec))
    if isinstance(enc.box, BallComplex):
        refinement = refine_box(
            complex_function(h),
            complex_function(dh),
            enc.box,
            target_prec,
            max_prec,
            budget.newton_iterations,
            budget.segment_depth,
        )
    else:
        refinement = refine_box(
            real_function(h), real_function(dh), enc.box, target_prec, max_prec, budget.newton_iterations
        )
    if refinement.box is enc.box:
        return enc
    logger.debug(f"Refined root to 2^-{target_prec} using {refinement.prec} bits")
    return RootEnclosure(refinement.box, enc.uniqueness_proof, max(enc.prec_used, refinement.prec), enc.branch)


def _replay_sign_change(h: Expr, box: BallReal, prec: int) -> bool:
    fn, dfn = real_function(h), real_function(differentiate(h))
    lo, hi = box.endpoints()
    f_lo, f_hi = fn(lo, prec), fn(hi, prec)
    if f_lo.contains_zero() or f_hi.contains_zero():
        return False
    return dfn(box, prec).excludes_zero() and f_lo.is_positive() != f_hi.is_positive()


def _replay_newton(h: Expr, box: BallReal | BallComplex, prec: int) -> bool:
    dh = differentiate(h)
    if isinstance(box, BallComplex):
        step = newton_step(complex_function(h), complex_function(dh), box, prec)
    else:
        step = newton_step(real_function(h), real_function(dh), box, prec)
    return step is not None and step.contracted


def _replay_winding(h: Expr, box: BallReal | BallComplex, prec: int, budget: Budget) -> bool:
    z = box if isinstance(box, BallComplex) else BallComplex.from_real(box)
    if z.is_real():
        return False  # A winding proof needs a genuine rectangle
    try:
        return count_zeros(complex_function(h), Rect.from_ball(z), prec, budget.segment_depth) == 1
    except (BoundaryZero, ValueError):
        return False


def verify_enclosure(h: Expr, enc: RootEnclosure, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Independently rechecks enc: h over the box must contain 0 and the recorded uniqueness proof must replay"""
    prec = max(enc.prec_used, budget.start_prec)
    try:
        if isinstance(enc.box, BallComplex):
            value = complex_function(h)(enc.box, prec)
        else:
            value = real_function(h)(enc.box, prec)
        if not value.contains_zero():
            return False

        match enc.uniqueness_proof:
            case UniquenessProof.SIGN_CHANGE_MONOTONE if isinstance(enc.box, BallReal):
                return _replay_sign_change(h, enc.box, prec)
            case UniquenessProof.NEWTON_CONTRACTION:
                return _replay_newton(h, enc.box, prec)
            case UniquenessProof.WINDING_ONE:
                return _replay_winding(h, enc.box, prec, budget)
    except ArithmeticFailure as exc:
        logger.debug(f"Enclosure check failed: {exc}")
    return False
