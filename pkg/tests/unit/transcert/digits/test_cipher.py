from fractions import Fraction

import pytest

from tests.conftest import NOTE_EQUATION
from transcert.arith.region import Interval
from transcert.digits.cipher import keystream, xor_cipher
from transcert.digits.stream import DigitStream
from transcert.error import KeyTooShort
from transcert.expr.parser import parse_equation
from transcert.rootfind.real import isolate_real_roots


@pytest.fixture
def note_stream(note_interval: Interval) -> DigitStream:
    h = parse_equation(NOTE_EQUATION).residual()
    (root,) = isolate_real_roots(h, note_interval)
    return DigitStream.for_root(h, root)


@pytest.mark.parametrize(
    "value, nbytes, offset, expected",
    [
        (Fraction(1, 2), 2, 0, b"\x80\x00"),
        (Fraction(1, 2), 2, 1, b"\x00\x00"),
        (Fraction(171, 256), 1, 0, b"\xab"),
        (Fraction(171, 256), 1, 1, b"\xb0"),
    ],
)
def test_keystream_exact(value, nbytes: int, offset: int, expected: bytes):
    assert keystream(DigitStream.for_value(value), nbytes, offset) == expected


def test_keystream_offsets(note_stream: DigitStream):
    key = keystream(note_stream, 8)
    assert len(key) == 8
    assert keystream(note_stream, 8) == key
    assert keystream(note_stream, 6, offset=4) == key[2:]
    assert note_stream.cursor == 0
    assert note_stream.base == 10


@pytest.mark.parametrize("nbytes, offset", [(0, 0), (1, -1)])
def test_keystream_rejects(nbytes: int, offset: int):
    with pytest.raises(ValueError):
        keystream(DigitStream.for_value(Fraction(1, 2)), nbytes, offset)


@pytest.mark.parametrize(
    "key, message, expected",
    [
        (b"\x27", b"A", b"\x66"),
        (b"\x00\x00\x00", b"abc", b"abc"),
        (b"\xff\x0f\x00\x99", b"\x0f\xf0", b"\xf0\xff"),
        (b"\x01", b"", b""),
    ],
)
def test_xor_cipher(key: bytes, message: bytes, expected: bytes):
    assert xor_cipher(key, message) == expected


def test_xor_cipher_round_trip(note_stream: DigitStream):
    message = b"attack at dawn"
    key = keystream(note_stream, len(message))
    ciphertext = xor_cipher(key, message)
    assert ciphertext != message
    assert xor_cipher(key, ciphertext) == message


def test_xor_cipher_key_too_short():
    with pytest.raises(KeyTooShort):
        xor_cipher(b"\x01", b"ab")


def test_keystream_tail_is_certified(note_stream: DigitStream):
    key = keystream(note_stream, 32)
    assert len(key) == 32
    assert key[:4] == bytes.fromhex("465490d7")
    assert key[8:] != bytes(24)
    assert keystream(note_stream, 8, offset=48) == key[24:]
