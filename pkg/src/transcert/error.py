from fractions import Fraction


class TranscertError(Exception):
    """General base exception for anything transcert might raise"""

    pass


class ConfigError(TranscertError):
    """Something is wrong/missing with the current run configuration or budget file"""

    pass


class ParseError(TranscertError):
    """The equation text doesn't match the equation grammar"""

    position: int  # Character offset into the source text where parsing failed
    expected: frozenset[str]  # Human readable descriptions of what would have been accepted

    def __init__(self, position: int, expected: set[str] | frozenset[str], text: str | None = None) -> None:
        self.position = position
        self.expected = frozenset(expected)
        message = f"Parse error at position {position}: expected one of {', '.join(sorted(self.expected))}"
        if text is not None:
            message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class ArithmeticFailure(TranscertError):
    """Base for ball arithmetic failures. path identifies the offending subtree of an expression (child indices
    from the root) when the failure happened during expression evaluation."""

    path: tuple[int, ...]

    def __init__(self, message: str, path: tuple[int, ...] = ()) -> None:
        super().__init__(message)
        self.message = message
        self.path = path

    def with_path(self, path: tuple[int, ...]) -> "ArithmeticFailure":
        """Returns a copy of this failure annotated with the subtree path (the innermost path wins)"""
        if self.path:
            return self
        return type(self)(self.message, path)

    def __str__(self) -> str:
        if self.path:
            return f"{self.message} (at subtree {'/'.join(str(p) for p in self.path)})"
        return self.message


class DivisorMayBeZero(ArithmeticFailure):
    """The divisor ball contains zero"""

    pass


class DomainViolation(ArithmeticFailure):
    """The argument ball leaves the domain of the function"""

    pass


class BranchCutStraddle(ArithmeticFailure):
    """A complex ball crosses the branch cut of a principal-branch function"""

    pass


class RejectedAlgebraic(TranscertError):
    """An algebraic number could not be constructed as requested (eg: the polynomial has a rational root)"""

    pass


class UndecidedError(TranscertError):
    """A subdivision / refinement budget was exhausted before a decision could be made. regions holds the
    unresolved regions (as human readable strings) and found holds anything that was proven before giving up."""

    def __init__(self, message: str, regions: list[str] | None = None, found: list | None = None) -> None:
        super().__init__(message)
        self.regions = regions or []
        self.found = found or []


class BoundaryZero(TranscertError):
    """The image of a contour segment never excluded zero within budget"""

    def __init__(self, rect: object) -> None:
        super().__init__(f"Contour of {rect} could not be separated from a zero within budget. Perturb the region.")
        self.rect = rect


class NoRootWithin(TranscertError):
    """No root was found within the requested radius"""

    def __init__(self, r_max: Fraction) -> None:
        super().__init__(f"No root with modulus <= {r_max}")
        self.r_max = r_max


class DuplicateExponents(TranscertError):
    """The exponents of a Lindemann-Weierstrass combination are not pairwise distinct"""

    pass


class AllCoefficientsZero(TranscertError):
    """Every coefficient of a Lindemann-Weierstrass combination is zero"""

    pass


class InputNotCertified(TranscertError):
    """A certificate combinator received a certificate whose verdict isn't Certified"""

    pass


class ZeroArgument(TranscertError):
    """A function value certificate was requested at zero"""

    pass


class BoundaryUnresolved(TranscertError):
    """A digit could not be decided because the value sits too close to a digit boundary"""

    def __init__(self, position: int, bits: int) -> None:
        super().__init__(f"Digit at position {position} still straddles a boundary after refining to {bits} bits")
        self.position = position
        self.bits = bits


class TooFewDigits(TranscertError):
    """A statistical test was requested over a digit string that is too short"""

    pass


class KeyTooShort(TranscertError):
    """The XOR key is shorter than the message"""

    pass


class NotRepresentable(TranscertError):
    """An algebraic operation produced a value outside the supported exact representations (eg: sqrt(2) +
    sqrt(3) isn't a single quadratic surd)"""

    pass
