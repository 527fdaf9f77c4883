from fractions import Fraction

from rich.console import Console

from tests.conftest import NOTE_EQUATION
from transcert.arith.functions import NamedConstant
from transcert.arith.region import Interval, Rect
from transcert.certify import certify
from transcert.certify.combine import builtin_certificate, combine_complex
from transcert.digits.stats import stat_tests
from transcert.expr.classify import classify
from transcert.expr.parser import parse_equation
from transcert.model.output import DigitsOutput, DigitTable
from transcert.results.console import render_certificate, render_digits, render_roots, render_stats, render_table
from transcert.rootfind.real import isolate_real_roots


def test_render_roots(record_console: Console, note_interval: Interval):
    roots = isolate_real_roots(parse_equation(NOTE_EQUATION).residual(), note_interval)
    render_roots(record_console, roots, NOTE_EQUATION)
    text = record_console.export_text()
    assert NOTE_EQUATION in text
    assert "2.2747" in text
    assert "No roots" not in text


def test_render_roots_empty(record_console: Console):
    avoided = [Rect(Fraction(-2), Fraction(-1), Fraction(-1), Fraction(1))]
    render_roots(record_console, [], "ln(x) = 5", avoided)
    text = record_console.export_text()
    assert "No roots found for ln(x) = 5" in text
    assert "Skipped 1 region(s)" in text


def test_render_certificate(record_console: Console, note_interval: Interval):
    equation = parse_equation(NOTE_EQUATION)
    h = equation.residual()
    (root,) = isolate_real_roots(h, note_interval)
    certificate = certify(classify(equation.lhs, equation.rhs), root, h, equation_text=NOTE_EQUATION)
    render_certificate(record_console, certificate)
    text = record_console.export_text()
    assert "Certified" in text
    assert "Thm2" in text
    assert "root != 0" in text
    assert "transcert" in text


def test_render_certificate_with_inputs(record_console: Console):
    certificate = combine_complex(builtin_certificate(NamedConstant.E, 64), builtin_certificate(NamedConstant.PI, 64))
    render_certificate(record_console, certificate)
    text = record_console.export_text()
    assert "Prop1" in text
    assert "Number: e" in text
    assert "Number: pi" in text
    assert text.count("Certified") >= 3


def test_render_digits_and_table(record_console: Console):
    render_digits(record_console, DigitsOutput(base=10, offset=0, sign="", integer_part="2", digits="27472"))
    render_table(record_console, DigitTable(base=10, offset=0, width=2, cells=[["27", "47"]]))
    assert record_console.export_text() == "2.27472\n27 47\n"


def test_render_stats(record_console: Console):
    render_stats(record_console, stat_tests("0123456789" * 100, ["chi2", "runs"]))
    text = record_console.export_text()
    assert "1000 base 10 digits" in text
    assert "chi2" in text
    assert "runs" in text
    assert "no randomness or security claim" in text
