import json
from fractions import Fraction

import pytest
from assertical.asserts.type import assert_list_type

from tests.conftest import NOTE_EQUATION
from transcert.arith.functions import NamedConstant
from transcert.arith.region import Interval
from transcert.certify import certify
from transcert.certify.combine import builtin_certificate, combine_complex
from transcert.digits.stats import stat_tests
from transcert.digits.stream import DigitStream
from transcert.digits.table import random_table
from transcert.expr.classify import classify
from transcert.expr.parser import parse_equation
from transcert.model.output import DigitsOutput
from transcert.rootfind.real import isolate_real_roots
from transcert.schema.validator import DocumentKind, validate_json


def _note_certificate(note_interval: Interval) -> dict:
    equation = parse_equation(NOTE_EQUATION)
    h = equation.residual()
    (root,) = isolate_real_roots(h, note_interval)
    form = classify(equation.lhs, equation.rhs)
    return certify(form, root, h, equation=equation, equation_text=NOTE_EQUATION).to_json()


def test_validate_certificate(note_interval: Interval):
    assert validate_json(_note_certificate(note_interval), DocumentKind.CERTIFICATE) == []

    nested = combine_complex(builtin_certificate(NamedConstant.E, 64), builtin_certificate(NamedConstant.PI, 64))
    assert validate_json(nested.to_json(), DocumentKind.CERTIFICATE) == []


def test_validate_digit_documents():
    table = random_table(DigitStream.for_value(Fraction(1, 7), prec=256), 2, 2)
    assert validate_json(table.to_dict(), DocumentKind.TABLE) == []
    assert validate_json(stat_tests("0123456789" * 100, ["chi2", "runs"]).to_dict(), "stats") == []
    digits = DigitsOutput(base=16, offset=0, sign="-", integer_part="2", digits="4a0f", source=NOTE_EQUATION)
    assert validate_json(digits.to_dict(), DocumentKind.DIGITS) == []


def test_validate_json_text(note_interval: Interval):
    assert validate_json(json.dumps(_note_certificate(note_interval)), DocumentKind.CERTIFICATE) == []


@pytest.mark.parametrize(
    "document, kind",
    [
        ("this is not json {", DocumentKind.STATS),
        ({}, DocumentKind.ROOTS),
        ({"schema": 2, "base": 10, "digit_count": 0, "results": []}, DocumentKind.STATS),
        ({"schema": 1, "base": 10, "offset": 0, "width": 1, "cells": [["5A"]]}, DocumentKind.TABLE),
        ({"schema": 1, "base": 1, "offset": 0, "sign": "", "integer_part": "0", "digits": ""}, DocumentKind.DIGITS),
        (
            {"schema": 1, "base": 10, "offset": 0, "sign": "+", "integer_part": "0", "digits": "", "extra": 1},
            DocumentKind.DIGITS,
        ),
    ],
)
def test_validate_json_invalid(document, kind: DocumentKind):
    errors = validate_json(document, kind)
    assert_list_type(str, errors)
    assert len(errors) > 0


def test_validate_certificate_bad_hex(note_interval: Interval):
    document = _note_certificate(note_interval)
    document["root"]["re_mid"] = "2.2747"
    errors = validate_json(document, DocumentKind.CERTIFICATE)
    assert len(errors) == 1
    assert errors[0].startswith("root")
