from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.arith.region import Interval, Rect


class UniquenessProof(StrEnum):
    SIGN_CHANGE_MONOTONE = "SignChangeMonotone"  # Endpoint signs differ and the derivative ball excludes 0
    NEWTON_CONTRACTION = "NewtonContraction"  # The interval Newton image sits strictly inside the box
    WINDING_ONE = "WindingOne"  # The boundary winding number of the enclosing rectangle is 1


@dataclass(frozen=True)
class RootEnclosure:
    """A box holding exactly one zero of the equation function (by the recorded proof)"""

    box: BallReal | BallComplex
    uniqueness_proof: UniquenessProof
    prec_used: int
    branch: str | None = None  # "principal" when the equation involves multivalued functions

    def is_real(self) -> bool:
        return isinstance(self.box, BallReal)

    def as_complex(self) -> BallComplex:
        return self.box if isinstance(self.box, BallComplex) else BallComplex.from_real(self.box)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Canonical ordering by (re, im) midpoints"""
        z = self.as_complex()
        return (z.re.mid_fraction(), z.im.mid_fraction())

    def width(self) -> Fraction:
        return Fraction(*self.box.width().as_integer_ratio())

    def region(self) -> Interval | Rect:
        if isinstance(self.box, BallReal):
            return Interval.from_ball(self.box)
        return Rect.from_ball(self.box)

    def to_json(self) -> dict[str, Any]:
        z = self.as_complex()
        return {
            "re_mid": z.re.hex_mid(),
            "re_rad": z.re.hex_rad(),
            "im_mid": z.im.hex_mid(),
            "im_rad": z.im.hex_rad(),
            "proof": str(self.uniqueness_proof),
            "prec": self.prec_used,
            "branch": self.branch,
            "approx": {"re": str(z.re), "im": str(z.im)},
        }


def sort_roots(roots: list[RootEnclosure]) -> list[RootEnclosure]:
    return sorted(roots, key=RootEnclosure.sort_key)


@dataclass(frozen=True)
class ComplexSearch:
    """Outcome of a complex root search over a rectangle"""

    region: Rect  # The searched rectangle (after any perturbation)
    roots: list[RootEnclosure] = field(default_factory=list)
    avoided: list[Rect] = field(default_factory=list)  # Rectangles skipped because they meet a branch cut
    undecided: list[Rect] = field(default_factory=list)  # Regions left unresolved when the budget ran out
