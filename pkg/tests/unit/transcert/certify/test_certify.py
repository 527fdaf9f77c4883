from fractions import Fraction

import pytest

from tests.conftest import NOTE_EQUATION
from transcert.arith.real import BallReal
from transcert.arith.region import Interval
from transcert.certify import NON_ALGEBRAIC_NOTE, certify
from transcert.certify.model import CheckStatus, Theorem, Verdict
from transcert.expr.classify import classify
from transcert.expr.parser import parse_equation
from transcert.model.config import Budget
from transcert.rootfind.model import RootEnclosure, UniquenessProof
from transcert.rootfind.real import isolate_real_roots


def _certify_real_root(text: str, lo, hi, strict: bool = False, budget: Budget | None = None):
    equation = parse_equation(text)
    h = equation.residual()
    (root,) = isolate_real_roots(h, Interval(Fraction(lo), Fraction(hi)))
    form = classify(equation.lhs, equation.rhs)
    kwargs = {} if budget is None else {"budget": budget}
    return certify(form, root, h, strict=strict, equation=equation, equation_text=text, **kwargs)


@pytest.mark.parametrize(
    "text, lo, hi, expected_theorem",
    [
        (NOTE_EQUATION, 2, 3, Theorem.THM2),
        ("x*e^x = -x + 12", 1, 2, Theorem.THM2),
        ("(3*x)^sqrt(7) = x^2 + 10*x + 5", Fraction(1, 2), 2, Theorem.THM4),
        ("sin(x) = 1 - x", 0, 1, Theorem.COR2),
        ("atan(x) = x^2 - 1", 1, 2, Theorem.COR3),
        ("(sin(x) + 1)^2 = x", 2, 3, Theorem.COR4),
        ("sin(x)^2 + sin(x) = x", 1, 2, Theorem.COR5),
        ("sin(x)^5 + sin(x) = x", 1, 2, Theorem.COR1),
    ],
)
def test_certify_root(text: str, lo, hi, expected_theorem: Theorem):
    certificate = _certify_real_root(text, lo, hi)
    assert certificate.theorem == expected_theorem
    assert certificate.verdict == Verdict.CERTIFIED, [(c.name, c.status) for c in certificate.checks]
    assert certificate.reason is None
    assert certificate.is_certified()
    assert all(check.status == CheckStatus.PASS for check in certificate.checks)
    assert certificate.equation_text == text


def test_certify_thm4_checks():
    certificate = _certify_real_root("(3*x)^sqrt(7) = x^2 + 10*x + 5", Fraction(1, 2), 2)
    statuses = {check.name: check.status for check in certificate.checks}
    assert statuses["alpha_1..alpha_n are algebraic and not 0 or 1"] == CheckStatus.PASS
    assert statuses["beta_1..beta_n are irrational"] == CheckStatus.PASS
    assert statuses["powers are taken on the principal branch"] == CheckStatus.PASS
    assert abs(float(certificate.root.box) - 0.932103) < 1e-6


def test_certify_strict_adds_separation_check():
    relaxed = _certify_real_root(NOTE_EQUATION, 2, 3)
    strict = _certify_real_root(NOTE_EQUATION, 2, 3, strict=True)
    assert strict.strict
    assert len(strict.checks) == len(relaxed.checks) + 1
    assert strict.checks[-1].name == "alpha_i f_i(root) are pairwise distinct"
    assert strict.verdict == Verdict.CERTIFIED


def test_certify_non_algebraic_constant():
    certificate = _certify_real_root("pi^x + 4*x = 49", 3, Fraction(16, 5))
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.theorem is None
    assert certificate.reason == "NonAlgebraicConstant"
    assert certificate.note == NON_ALGEBRAIC_NOTE
    assert abs(float(certificate.root.box) - 3.14097) < 5e-5


def test_certify_refuses_zero_root():
    # sin(x)^2 + sin(x) = x is solved by x = 0, which isn't transcendental
    equation = parse_equation("sin(x)^2 + sin(x) = x")
    h = equation.residual()
    root = RootEnclosure(BallReal.exact(0, 64), UniquenessProof.NEWTON_CONTRACTION, 64)
    certificate = certify(classify(equation.lhs, equation.rhs), root, h)
    assert certificate.theorem == Theorem.COR5
    assert certificate.verdict == Verdict.REFUSED
    assert certificate.reason == "root != 0"


def test_certify_undecided(small_budget: Budget):
    # The root is sqrt(2) so g(root) = root^2 - 2 is zero but can never be shown to be exactly zero
    certificate = _certify_real_root("x*sin(x^2 - 2) = x^2 - 2", Fraction(13, 10), Fraction(3, 2), budget=small_budget)
    assert certificate.theorem == Theorem.COR2
    assert certificate.verdict == Verdict.UNDECIDED
    assert certificate.witness_prec is not None
    statuses = {check.name: check.status for check in certificate.checks}
    assert statuses["g(root) != 0"] == CheckStatus.UNDECIDED
    assert statuses["root != 0"] == CheckStatus.PASS
    assert certificate.to_json()["witness_prec"] == certificate.witness_prec


def test_certify_lw_form():
    equation = parse_equation("e^x + e^(2*x) = e + e^2")
    root = RootEnclosure(BallReal.exact(1, 64), UniquenessProof.NEWTON_CONTRACTION, 64)
    certificate = certify(classify(equation.lhs, equation.rhs), root, equation.residual())
    assert certificate.theorem == Theorem.LW
    assert certificate.verdict == Verdict.CERTIFIED
    assert abs(float(certificate.value) - 10.10734) < 1e-5


def test_certificate_json():
    certificate = _certify_real_root(NOTE_EQUATION, 2, 3)
    data = certificate.to_json()
    assert data["schema"] == 1
    assert data["theorem"] == "Thm2"
    assert data["verdict"] == "Certified"
    assert data["form"]["kind"] == "Thm2"
    assert data["equation"]["text"] == NOTE_EQUATION
    assert data["root"]["proof"] in {"SignChangeMonotone", "NewtonContraction"}
    assert "reason" not in data
    assert "witness_prec" not in data
    assert [c["status"] for c in data["checks"]] == ["Pass"] * len(certificate.checks)
