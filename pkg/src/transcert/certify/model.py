from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.constants import SCHEMA_VERSION
from transcert.expr.forms import EquationForm, equation_json
from transcert.expr.tree import Equation
from transcert.rootfind.model import RootEnclosure


class Theorem(StrEnum):
    THM2 = "Thm2"  # Exponential polynomial equations
    THM4 = "Thm4"  # Products of principal branch powers
    COR1 = "Cor1"
    COR2 = "Cor2"
    COR3 = "Cor3"
    COR4 = "Cor4"
    COR5 = "Cor5"
    LW = "LW"  # Lindemann-Weierstrass combinations
    PROP1 = "Prop1"  # tau_1 +/- tau_2 i
    FUNCTION_VALUE = "FunctionValue"  # f(a) for a nonzero algebraic a
    BUILTIN = "Builtin"  # e and pi
    GSB = "GSB"  # Gelfond-Schneider-Baker power products


class CheckStatus(StrEnum):
    PASS = "Pass"
    FAIL = "Fail"
    UNDECIDED = "Undecided"


class Verdict(StrEnum):
    CERTIFIED = "Certified"
    REFUSED = "Refused"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Check:
    """A single hypothesis of a theorem instantiated for a particular equation / root"""

    name: str  # The hypothesis as stated for the theorem
    status: CheckStatus
    witness_prec: int | None = None  # Precision (bits) at which a numeric check was decided (or given up)
    detail: str | None = None  # Human readable elaboration (mostly for Fail / Undecided)

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"name": self.name, "status": str(self.status), "witness_prec": self.witness_prec}
        if self.detail is not None:
            data["detail"] = self.detail
        return data


def ball_json(value: BallReal | BallComplex) -> dict[str, Any]:
    z = value if isinstance(value, BallComplex) else BallComplex.from_real(value)
    return {
        "re_mid": z.re.hex_mid(),
        "re_rad": z.re.hex_rad(),
        "im_mid": z.im.hex_mid(),
        "im_rad": z.im.hex_rad(),
        "approx": {"re": str(z.re), "im": str(z.im)},
    }


@dataclass(frozen=True)
class Certificate:
    """An advisory transcendence record: the hypotheses of theorem checked against a located root (or a value).

    verdict is Certified iff every check passed. Otherwise it is Refused (reason is the first failing check) or
    Undecided (some check ran out of budget)."""

    theorem: Theorem | None  # None for equations that don't match any supported form
    checks: tuple[Check, ...]
    verdict: Verdict
    reason: str | None = None
    strict: bool = False
    equation: Equation | None = None
    equation_text: str | None = None
    form: EquationForm | None = None
    root: RootEnclosure | None = None
    value: BallReal | BallComplex | None = None  # The number certified when it isn't a root (eg: LW, Prop1)
    subject: str | None = None  # Human readable description of value
    note: str | None = None
    inputs: tuple["Certificate", ...] = field(default_factory=tuple)

    @property
    def witness_prec(self) -> int | None:
        """The largest precision that any undecided check reached"""
        precs = [c.witness_prec for c in self.checks if c.status == CheckStatus.UNDECIDED and c.witness_prec]
        return max(precs) if precs else None

    def is_certified(self) -> bool:
        return self.verdict == Verdict.CERTIFIED

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "equation": equation_json(self.equation, self.equation_text) if self.equation is not None else None,
            "form": self.form.to_json() if self.form is not None else None,
            "theorem": str(self.theorem) if self.theorem is not None else None,
            "root": self.root.to_json() if self.root is not None else None,
            "checks": [c.to_json() for c in self.checks],
            "strict": self.strict,
            "verdict": str(self.verdict),
        }
        if self.reason is not None:
            data["reason"] = self.reason
        if self.verdict == Verdict.UNDECIDED:
            data["witness_prec"] = self.witness_prec
        if self.value is not None:
            data["value"] = ball_json(self.value)
        if self.subject is not None:
            data["subject"] = self.subject
        if self.note is not None:
            data["note"] = self.note
        if self.inputs:
            data["inputs"] = [c.to_json() for c in self.inputs]
        return data


def decide_verdict(checks: list[Check] | tuple[Check, ...]) -> tuple[Verdict, str | None]:
    """Certified iff every check passed, Refused citing the first failure, Undecided otherwise"""
    for check in checks:
        if check.status == CheckStatus.FAIL:
            return Verdict.REFUSED, check.name
    if all(check.status == CheckStatus.PASS for check in checks):
        return Verdict.CERTIFIED, None
    return Verdict.UNDECIDED, None


def make_certificate(theorem: Theorem, checks: list[Check], **kwargs: Any) -> Certificate:
    verdict, reason = decide_verdict(checks)
    return Certificate(theorem=theorem, checks=tuple(checks), verdict=verdict, reason=reason, **kwargs)
