"""Keystream generation from the hex digits of a certified value and the XOR demonstration cipher.

Nothing here is cryptographically secure: reusing a keystream for two messages leaks their XOR."""

import logging

import numpy as np

from transcert.digits.stream import KEYSTREAM_BASE, DigitStream
from transcert.error import KeyTooShort

logger = logging.getLogger(__name__)


def keystream(stream: DigitStream, nbytes: int, offset: int = 0) -> bytes:
    """nbytes bytes packed from the fractional hex digits starting after hex position offset (two digits per
    byte, high nibble first). The passed stream is left untouched."""
    if nbytes < 1:
        raise ValueError(f"nbytes must be positive (got {nbytes})")
    if offset < 0:
        raise ValueError(f"offset must be non negative (got {offset})")

    hex_stream = stream.with_base(KEYSTREAM_BASE, offset)
    key = bytes.fromhex(hex_stream.read(2 * nbytes))
    logger.debug(f"Generated {nbytes} keystream bytes from hex offset {offset}")
    return key


def xor_cipher(key: bytes, message: bytes) -> bytes:
    """Bytewise message XOR key (the first len(message) bytes of it). Applying it twice restores the message."""
    if len(key) < len(message):
        raise KeyTooShort(f"Key has {len(key)} bytes but the message has {len(message)}")
    if not message:
        return b""

    message_arr = np.frombuffer(message, dtype=np.uint8)
    key_arr = np.frombuffer(key, dtype=np.uint8, count=len(message))
    return np.bitwise_xor(message_arr, key_arr).tobytes()
