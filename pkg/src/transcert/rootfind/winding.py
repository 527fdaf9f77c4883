import logging
import random
from fractions import Fraction

from transcert.arith.contour import count_zeros
from transcert.arith.region import Rect
from transcert.error import ArithmeticFailure, BoundaryZero, BranchCutStraddle
from transcert.expr.tree import Expr, to_source
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.common import complex_function, touches_branch_cut

logger = logging.getLogger(__name__)

PERTURB_SEED = 20240517  # Fixed so that perturbed searches are reproducible
PERTURB_STEPS = 2**16


def winding_number(h: Expr, rect: Rect, prec: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """The number of zeros (with multiplicity) of h inside rect by the argument principle.

    Raises BranchCutStraddle if rect meets a principal branch cut of h and BoundaryZero if some part of the boundary
    can't be separated from a zero of h within budget."""
    if touches_branch_cut(h, rect, prec):
        raise BranchCutStraddle(f"{rect} meets a branch cut of {to_source(h)}")
    try:
        return count_zeros(complex_function(h), rect, prec, budget.segment_depth)
    except ArithmeticFailure as exc:
        # Poles / domain failures on the contour leave the boundary unresolved just like a zero
        logger.debug(f"Contour of {rect} failed: {exc}")
        raise BoundaryZero(rect) from exc


def perturbation(prec: int, rng: random.Random) -> Fraction:
    """A random dyadic step between half of and all of 2^-(prec/4)"""
    return Fraction(rng.randrange(PERTURB_STEPS // 2, PERTURB_STEPS + 1), PERTURB_STEPS * 2 ** (prec // 4))


def perturbed_winding(h: Expr, rect: Rect, prec: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, Rect]:
    """winding_number, growing rect by a small random dyadic margin whenever its boundary touches a zero.

    Returns (winding, rect actually used). Raises BoundaryZero once budget.perturb_retries is exhausted."""
    rng = random.Random(PERTURB_SEED)  # nosec - reproducibility, not security
    candidate = rect
    for attempt in range(budget.perturb_retries + 1):
        try:
            return winding_number(h, candidate, prec, budget), candidate
        except BoundaryZero:
            if attempt == budget.perturb_retries:
                break
            candidate = rect.expanded(perturbation(budget.start_prec, rng))
            logger.debug(f"Boundary of {rect} touched a zero. Retrying with {candidate}")
    raise BoundaryZero(rect)
