"""Complex root location by recursive quadrisection guided by winding numbers.

The winding number of a rectangle, less the poles that may lie inside it, bounds its zeros. Rectangles holding no
zero are dropped, rectangles holding exactly one are refined by complex interval Newton and anything else is split
again. Rectangles meeting a principal branch cut are split a few times and the pieces still on the cut are reported
as avoided."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from transcert.arith.newton import _ALTERNATE_SPLITS, refine_box
from transcert.arith.region import Rect
from transcert.arith.rounding import to_fraction
from transcert.error import ArithmeticFailure, BoundaryZero, NoRootWithin, UndecidedError
from transcert.expr.derivative import differentiate
from transcert.expr.tree import Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.common import branch_of, complex_function, touches_branch_cut
from transcert.rootfind.model import ComplexSearch, RootEnclosure, UniquenessProof, sort_roots
from transcert.rootfind.poles import PoleStructure, zero_count
from transcert.rootfind.winding import perturbed_winding, winding_number

logger = logging.getLogger(__name__)

MODULUS_SCAN_STEPS = 16  # The minimal modulus scan grows squares in r_max / 16 steps


@dataclass(frozen=True)
class _Pending:
    rect: Rect
    depth: int
    winding: int | None  # None when rect meets a branch cut (no winding available)


def _child_windings(h: Expr, rect: Rect, prec: int, budget: Budget) -> list[_Pending] | None:
    """Quadrisects rect, trying alternative split points whenever a child boundary runs through a zero. None if
    every split failed."""
    for ratio in _ALTERNATE_SPLITS:
        children: list[_Pending] = []
        try:
            for child in rect.quadrisect(ratio):
                if touches_branch_cut(h, child, prec):
                    children.append(_Pending(child, 0, None))
                else:
                    children.append(_Pending(child, 0, winding_number(h, child, prec, budget)))
        except BoundaryZero:
            logger.debug(f"Split of {rect} at {ratio} ran through a zero. Trying another split.")
            continue
        return children
    return None


def _zero_bounds(poles: PoleStructure, item: _Pending, prec: int, budget: Budget) -> tuple[int, int] | None:
    """Bounds on the zeros inside item.rect. None when they can't be counted (a branch cut or an uncountable
    singularity inside)"""
    if item.winding is None:
        return None
    if poles.is_pole_free():
        return item.winding, item.winding
    try:
        return zero_count(poles, item.rect, item.winding, prec, budget)
    except BoundaryZero:
        logger.debug(f"A pole of h lies on the boundary of {item.rect}")
        return None


def _search(
    h: Expr, region: Rect, winding: int | None, prec: int, max_roots: int | None, budget: Budget
) -> ComplexSearch:
    fn, dfn = complex_function(h), complex_function(differentiate(h))
    branch = branch_of(h)
    poles = PoleStructure.of(h)
    target_bits = max(prec // 2, 1)

    roots: list[RootEnclosure] = []
    avoided: list[Rect] = []
    undecided: list[Rect] = []
    stack: list[_Pending] = [_Pending(region, 0, winding)]
    while stack:
        if max_roots is not None and len(roots) >= max_roots:
            break
        item = stack.pop()
        count = _zero_bounds(poles, item, prec, budget)

        if count == (0, 0):
            continue

        if count == (1, 1):
            try:
                refinement = refine_box(
                    fn, dfn, item.rect.ball(prec), target_bits, budget.max_prec, budget.newton_iterations,
                    budget.segment_depth,
                )
            except (UndecidedError, ArithmeticFailure) as exc:
                logger.debug(f"Unable to refine the root in {item.rect}: {exc}")
                undecided.append(item.rect)
                continue
            roots.append(RootEnclosure(refinement.box, UniquenessProof.WINDING_ONE, refinement.prec, branch))
            logger.debug(f"Located root {refinement.box} in {item.rect}")
            continue

        if count is not None and count[1] < 0:
            logger.warning(f"Negative winding {item.winding} around {item.rect} with no pole accounted for")
            undecided.append(item.rect)
            continue
        if count is not None and count[0] != count[1]:
            logger.debug(f"{item.rect} holds between {count[0]} and {count[1]} zeros (a pole may lie inside)")

        depth_limit = budget.cut_depth if item.winding is None else budget.complex_depth
        if item.depth >= depth_limit:
            if item.winding is None:
                avoided.append(item.rect)
            else:
                undecided.append(item.rect)
            continue

        children = _child_windings(h, item.rect, prec, budget)
        if children is None:
            undecided.append(item.rect)
            continue
        if item.winding is not None and sum(c.winding or 0 for c in children) != item.winding:
            logger.warning(f"Winding of {item.rect} isn't the sum of its quadrants")
        stack.extend(_Pending(c.rect, item.depth + 1, c.winding) for c in reversed(children))

    return ComplexSearch(region=region, roots=sort_roots(roots), avoided=avoided, undecided=undecided)


def search_complex_roots(
    h: Expr,
    rect: Rect,
    prec: int | None = None,
    max_roots: int | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> ComplexSearch:
    """Locates the roots of h inside rect. Unresolved clusters and regions skipped because of a branch cut are
    reported rather than raised. A rect whose boundary runs through a zero is grown by a small perturbation (the
    searched region is returned). Undecided regions are retried at doubled precision up to budget.max_prec."""
    prec = max(prec or budget.start_prec, budget.start_prec)
    if touches_branch_cut(h, rect, prec):
        winding: int | None = None
        region = rect
    else:
        winding, region = perturbed_winding(h, rect, prec, budget)
    logger.debug(f"Searching {region} at {prec} bits (winding {winding})")

    result = _search(h, region, winding, prec, max_roots, budget)
    roots, avoided, undecided = list(result.roots), list(result.avoided), result.undecided
    while undecided and prec * 2 <= budget.max_prec and (max_roots is None or len(roots) < max_roots):
        prec *= 2
        logger.debug(f"Retrying {len(undecided)} undecided region(s) at {prec} bits")
        retried: list[Rect] = []
        for rect_left in undecided:
            try:
                if touches_branch_cut(h, rect_left, prec):
                    sub_winding: int | None = None
                else:
                    # Unperturbed so that sibling regions stay disjoint
                    sub_winding = winding_number(h, rect_left, prec, budget)
                sub = _search(h, rect_left, sub_winding, prec, max_roots, budget)
            except BoundaryZero:
                retried.append(rect_left)
                continue
            roots.extend(sub.roots)
            avoided.extend(sub.avoided)
            retried.extend(sub.undecided)
        undecided = retried

    if undecided:
        logger.warning(f"{len(undecided)} region(s) of {region} left undecided")
    return ComplexSearch(region=region, roots=sort_roots(roots), avoided=avoided, undecided=undecided)


def find_complex_roots(
    h: Expr,
    rect: Rect,
    prec: int | None = None,
    max_roots: int | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> list[RootEnclosure]:
    """The roots of h in rect sorted by (re, im). Raises UndecidedError if some cluster couldn't be separated"""
    search = search_complex_roots(h, rect, prec, max_roots, budget)
    if search.undecided:
        raise UndecidedError(
            f"{len(search.undecided)} region(s) of {search.region} undecided",
            regions=[str(r) for r in search.undecided],
            found=search.roots,
        )
    if search.avoided:
        logger.info(f"Skipped {len(search.avoided)} region(s) on a branch cut: {', '.join(map(str, search.avoided))}")
    return search.roots


def _unresolved(search: ComplexSearch) -> list[Rect]:
    return [*search.avoided, *search.undecided]


def minimal_modulus_root(
    h: Expr, r_max: Fraction, prec: int | None = None, budget: Budget = DEFAULT_BUDGET
) -> list[RootEnclosure]:
    """The root(s) of h of least modulus within r_max (conjugate pairs and other ties reported together).

    Squares of growing radius r_max * k / 16 are scanned until one holds a root. Since a root outside a square of
    radius r has modulus above r, the search is then repeated over the square whose radius is the least upper
    bound on the moduli found, which holds every candidate. Raises NoRootWithin if there's no root with modulus
    at most r_max and UndecidedError if a region skipped for a branch cut or left unresolved could hold a root
    nearer the origin."""
    prec = max(prec or budget.start_prec, budget.start_prec)
    unresolved: list[Rect] = []
    for k in range(1, MODULUS_SCAN_STEPS + 1):
        radius = r_max * Fraction(k, MODULUS_SCAN_STEPS)
        search = search_complex_roots(h, Rect.square(radius), prec, budget=budget)
        unresolved.extend(_unresolved(search))
        if search.roots:
            break
        logger.debug(f"No roots in the square of radius {float(radius):.6g}")
    else:
        if unresolved:
            raise UndecidedError(
                f"No root found within {r_max} but {len(unresolved)} region(s) couldn't be searched",
                regions=[str(r) for r in unresolved],
            )
        raise NoRootWithin(r_max)

    moduli = [c.as_complex().modulus() for c in search.roots]
    bound = min(to_fraction(m.upper_exact()) for m in moduli)
    search = search_complex_roots(h, Rect.square(bound), prec, budget=budget)
    unresolved.extend(_unresolved(search))
    candidates = search.roots
    moduli = [c.as_complex().modulus() for c in candidates]
    least_upper = min(to_fraction(m.upper_exact()) for m in moduli)
    minimal = sort_roots([c for c, m in zip(candidates, moduli) if to_fraction(m.lower_exact()) <= least_upper])

    least_lower = min(to_fraction(m.lower_exact()) for m in moduli)
    if least_lower > r_max:
        raise NoRootWithin(r_max)

    nearer = [r for r in unresolved if r.min_modulus_squared() <= least_upper * least_upper]
    if nearer:
        raise UndecidedError(
            f"{len(nearer)} unsearched region(s) lie within modulus {float(least_upper):.6g} of the origin",
            regions=[str(r) for r in nearer],
            found=minimal,
        )
    logger.info(f"Minimal modulus root(s): {', '.join(str(c.box) for c in minimal)}")
    return minimal
