from fractions import Fraction

import pytest

from tests.conftest import NOTE_EQUATION, NOTE_ROOT
from transcert.arith.region import Interval
from transcert.digits.stream import DigitStream
from transcert.digits.table import random_table
from transcert.expr.parser import parse_equation
from transcert.rootfind.real import isolate_real_roots


def test_random_table_note_root(note_interval: Interval):
    h = parse_equation(NOTE_EQUATION).residual()
    (root,) = isolate_real_roots(h, note_interval)
    stream = DigitStream.for_root(h, root)

    table = random_table(stream, 2, 3)
    assert table.rows == 2
    assert table.cols == 3
    assert table.width == 5
    assert table.offset == 0
    assert table.cells[0][0] == NOTE_ROOT.split(".")[1][:5]
    assert table.cells[0][1] == NOTE_ROOT.split(".")[1][5:10]
    assert all(len(cell) == 5 and cell.isdigit() for row in table.cells for cell in row)
    assert stream.cursor == 30

    # The next table carries on from where this one stopped
    follow_on = random_table(stream, 1, 1)
    assert follow_on.offset == 30
    assert stream.cursor == 35


def test_random_table_small():
    table = random_table(DigitStream.for_value(Fraction(1, 2)), 1, 1, width=1)
    assert table.cells == [["5"]]
    assert table.to_text() == "5"


def test_random_table_layout():
    # 1/7 = 0.142857 142857 ...
    table = random_table(DigitStream.for_value(Fraction(1, 7)), 2, 2, width=3)
    assert table.cells == [["142", "857"], ["142", "857"]]
    assert table.to_text() == "142 857\n142 857"
    assert table.to_dict()["cells"] == table.cells


@pytest.mark.parametrize("rows, cols, width", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-1, 2, 5)])
def test_random_table_rejects(rows: int, cols: int, width: int):
    with pytest.raises(ValueError):
        random_table(DigitStream.for_value(Fraction(1, 2)), rows, cols, width)
