import logging
from typing import Any

from transcert.certify.exponential import cor4_checks, lw_checks, lw_value, thm2_checks
from transcert.certify.function import cor2_checks, cor3_checks, function_poly_checks
from transcert.certify.model import Certificate, Check, CheckStatus, Theorem, Verdict, make_certificate
from transcert.certify.nonzero import RootRefiner
from transcert.certify.power import thm4_checks
from transcert.expr.forms import (
    Cor2Form,
    Cor3Form,
    Cor4Form,
    EquationForm,
    FormKind,
    FunctionPolyForm,
    LWForm,
    Thm2Form,
    Thm4Form,
    Unclassified,
    UnclassifiedReason,
)
from transcert.expr.tree import Equation, Expr
from transcert.model.config import DEFAULT_BUDGET, Budget
from transcert.rootfind.model import RootEnclosure

logger = logging.getLogger(__name__)

NON_ALGEBRAIC_NOTE = (
    "The equation has a transcendental coefficient (such as pi). Its root has been claimed transcendental but no"
    " supported theorem covers a non-algebraic base, so no certificate is issued."
)


def _refuse_unclassified(form: Unclassified, **kwargs: Any) -> Certificate:
    """kwargs are the remaining Certificate fields (form is set from the first argument)"""
    check = Check("equation matches a supported form", CheckStatus.FAIL, None, form.detail)
    note = NON_ALGEBRAIC_NOTE if form.reason == UnclassifiedReason.NON_ALGEBRAIC_CONSTANT else None
    return Certificate(
        theorem=None,
        checks=(check,),
        verdict=Verdict.REFUSED,
        reason=str(form.reason),
        note=note,
        form=form,
        **kwargs,
    )


def certify(
    form: EquationForm,
    root: RootEnclosure,
    h: Expr,
    strict: bool = False,
    budget: Budget = DEFAULT_BUDGET,
    equation: Equation | None = None,
    equation_text: str | None = None,
) -> Certificate:
    """Runs the hypothesis suite of the theorem matching form against root (a root of h = lhs - rhs located by
    rootfind). Never raises for a failed hypothesis - Refused / Undecided are verdicts.

    strict adds the pairwise separation of the exponent values to exponential polynomial certificates."""
    context: dict[str, Any] = {
        "strict": strict,
        "equation": equation,
        "equation_text": equation_text,
        "form": form,
        "root": root,
    }
    refiner = RootRefiner(h, root, budget)

    theorem: Theorem
    checks: list[Check]
    extra: dict[str, Any] = {}
    match form:
        case Unclassified():
            del context["form"]
            certificate = _refuse_unclassified(form, **context)
            logger.info(f"Refused {equation_text or form.detail}: {form.reason}")
            return certificate
        case Thm2Form():
            theorem, checks = Theorem.THM2, thm2_checks(form, refiner, strict)
        case Thm4Form():
            theorem, checks = Theorem.THM4, thm4_checks(form, root, refiner)
        case FunctionPolyForm():
            theorem = Theorem.COR5 if form.kind == FormKind.COR5 else Theorem.COR1
            checks = function_poly_checks(form, refiner)
        case Cor2Form():
            theorem, checks = Theorem.COR2, cor2_checks(form, refiner)
        case Cor3Form():
            theorem, checks = Theorem.COR3, cor3_checks(form, refiner)
        case Cor4Form():
            theorem, checks = Theorem.COR4, cor4_checks(form, refiner)
        case LWForm():
            # The transcendental number here is the constant side, the root itself is x = 1
            theorem, checks = Theorem.LW, lw_checks(list(form.coefficients), list(form.alphas))
            extra["value"] = lw_value(list(form.coefficients), list(form.alphas), refiner.start_prec)
        case _:
            raise ValueError(f"Unsupported equation form {type(form)}")

    certificate = make_certificate(theorem, checks, **context, **extra)
    logger.info(f"{theorem} certificate for {equation_text or 'root'}: {certificate.verdict}")
    return certificate

