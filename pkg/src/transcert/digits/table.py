import logging

from transcert.digits.stream import DigitStream
from transcert.model.output import DigitTable

logger = logging.getLogger(__name__)

DEFAULT_GROUP_WIDTH = 5


def random_table(stream: DigitStream, rows: int, cols: int, width: int = DEFAULT_GROUP_WIDTH) -> DigitTable:
    """Fills a rows x cols grid of width-digit groups row major from the stream (advancing its cursor).

    Raises BoundaryUnresolved (from the stream) if any digit can't be certified."""
    for label, count in (("rows", rows), ("cols", cols), ("width", width)):
        if count < 1:
            raise ValueError(f"{label} must be positive (got {count})")

    offset = stream.cursor
    text = stream.read(rows * cols * width)
    per_row = cols * width
    cells = [
        [text[r * per_row + c * width : r * per_row + (c + 1) * width] for c in range(cols)] for r in range(rows)
    ]
    logger.debug(f"Generated {rows}x{cols} table of width {width} from offset {offset} in base {stream.base}")
    return DigitTable(base=stream.base, offset=offset, width=width, cells=cells)
