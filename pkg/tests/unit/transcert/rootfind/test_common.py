from fractions import Fraction

import pytest

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.expr.parser import parse_expr
from transcert.rootfind.common import PRINCIPAL_BRANCH, branch_of, has_branch_cut, touches_branch_cut
from transcert.rootfind.model import RootEnclosure, UniquenessProof, sort_roots


@pytest.mark.parametrize(
    "text, expected",
    [
        ("e^x + x - 12", False),
        ("sin(x) + x^3", False),
        ("x^(1/2)", True),
        ("(3*x)^sqrt(7) - x", True),
        ("2^x", False),
        ("ln(x)", True),
        ("ln(2) * x", False),
        ("atan(x^2)", True),
        ("acsc(x)", True),
    ],
)
def test_has_branch_cut(text: str, expected: bool):
    assert has_branch_cut(parse_expr(text)) == expected
    assert branch_of(parse_expr(text)) == (PRINCIPAL_BRANCH if expected else None)


@pytest.mark.parametrize(
    "text, rect, expected",
    [
        ("ln(x)", (1, 2, -1, 1), False),
        ("ln(x)", (-1, 1, 1, 2), False),
        ("ln(x)", (-2, -1, -1, 1), True),
        ("sqrt(x - 3)", (1, 2, -1, 1), True),
        ("asin(x)", (-1 / 2, 1 / 2, -1, 1), False),
        ("asin(x)", (1 / 2, 2, -1, 1), True),
        ("atan(x)", (-1, 1, -1 / 2, 1 / 2), False),
        ("atan(x)", (-1, 1, 1 / 2, 2), True),
        ("asec(x)", (2, 3, -1, 1), False),
        ("asec(x)", (1 / 2, 3, -1, 1), True),
        ("e^x", (-5, 5, -5, 5), False),
    ],
)
def test_touches_branch_cut(text: str, rect: tuple, expected: bool):
    assert touches_branch_cut(parse_expr(text), Rect(*(Fraction(b) for b in rect)), 64) == expected


def test_root_enclosure_json():
    box = BallReal.from_bounds(Fraction(1, 4), Fraction(3, 4), 64)
    enc = RootEnclosure(box, UniquenessProof.NEWTON_CONTRACTION, 64)
    assert enc.is_real()
    assert enc.width() == Fraction(1, 2)
    assert enc.to_json() == {
        "re_mid": "0x1p-1",
        "re_rad": "0x1p-2",
        "im_mid": "0x0p+0",
        "im_rad": "0x0p+0",
        "proof": "NewtonContraction",
        "prec": 64,
        "branch": None,
        "approx": {"re": str(enc.box), "im": str(BallReal.zero(64))},
    }


def test_sort_roots():
    roots = [
        RootEnclosure(BallComplex.exact(1, -1, 64), UniquenessProof.WINDING_ONE, 64),
        RootEnclosure(BallReal.exact(-2, 64), UniquenessProof.SIGN_CHANGE_MONOTONE, 64),
        RootEnclosure(BallComplex.exact(1, 1, 64), UniquenessProof.WINDING_ONE, 64),
    ]
    assert [(float(r.as_complex().re), float(r.as_complex().im)) for r in sort_roots(roots)] == [
        (-2.0, 0.0),
        (1.0, -1.0),
        (1.0, 1.0),
    ]
