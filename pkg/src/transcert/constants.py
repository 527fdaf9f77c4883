from importlib.metadata import version

TRANSCERT_VERSION = version("transcert")
GMPY2_VERSION = version("gmpy2")

SCHEMA_VERSION = 1  # Version stamp for every JSON document we emit

RAD_PREC = 30  # Radii are stored with this many mantissa bits (always rounded up)
MIN_PREC = 2

DEFAULT_PREC = 64  # Starting working precision (bits)
CLI_DEFAULT_PREC = 128
CLI_MIN_PREC = 16

DIGIT_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
MIN_BASE = 2
MAX_BASE = 36
