"""Implements exact rational points of (T^S)^n, the pairing, and the shift action.

SPDX-License-Identifier: BSD-3-Clause
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from semiact.action import helper, model
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.ring import Ring
from semiact.action.duality.module import ModulePresentation, z_generator_matrix
from semiact.action.exceptions import DimensionMismatchException, RingMismatchException
from semiact.action.semigroup.table import FiniteSemigroup


@dataclass(frozen=True)
class TorusPoint:
    """A point x with coordinate (i, s) = x_i(s), every coordinate in [0, 1)."""

    coords: Tuple[Fraction, ...]
    width: int

    def __post_init__(self):
        if self.width < 1 or len(self.coords) % self.width:
            raise DimensionMismatchException(
                f"{len(self.coords)} coordinates do not split into blocks "
                f"of {self.width}"
            )

    @classmethod
    def reduce(cls, values: Sequence, width: int) -> "TorusPoint":
        """Returns the point with the given rational lift."""
        return cls(tuple(Fraction(v) % 1 for v in values), width)

    @classmethod
    def zero(cls, n: int, width: int) -> "TorusPoint":
        return cls((Fraction(0),) * (n * width), width)

    @property
    def n(self) -> int:
        return len(self.coords) // self.width

    def coordinate(self, i: int, s: int) -> Fraction:
        return self.coords[i * self.width + s]

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        _check(self, other)
        coords = [a + b for a, b in zip(self.coords, other.coords)]
        return TorusPoint.reduce(coords, self.width)

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        _check(self, other)
        coords = [a - b for a, b in zip(self.coords, other.coords)]
        return TorusPoint.reduce(coords, self.width)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_document(self) -> model.presentation.TorusPoint:
        return model.presentation.TorusPoint(
            coords=[helper.encode_rational(c) for c in self.coords]
        )


def from_document(document: model.presentation.TorusPoint, width: int) -> TorusPoint:
    coords = [helper.decode_rational(c) for c in document.coords]
    return TorusPoint.reduce(coords, width)


def _check(x: TorusPoint, y: TorusPoint):
    if (x.width, len(x.coords)) != (y.width, len(y.coords)):
        raise DimensionMismatchException("Points do not share a shape.")


def torus_pair(x: TorusPoint, vector: Sequence[AlgElem]) -> Fraction:
    """Returns the pairing of x with an integral vector, in [0, 1).

    Any rational lift of x gives the same value, as the vector is integral.
    """
    if len(vector) != x.n:
        raise DimensionMismatchException(
            f"Cannot pair a point with {x.n} coordinates against {len(vector)} entries"
        )

    total = Fraction(0)
    for i, entry in enumerate(vector):
        if entry.ring is not Ring.INT:
            raise RingMismatchException("The torus pairing requires integral vectors.")
        if entry.semigroup.size != x.width:
            raise DimensionMismatchException(
                "Vector and point use different semigroups."
            )
        for t, c in entry.coeffs.items():
            total += x.coordinate(i, t) * int(c)

    return total % 1


def membership_check(x: TorusPoint, presentation: ModulePresentation) -> bool:
    """Checks that x annihilates every generator A * (delta_t e_j) of J."""
    width = presentation.semigroup.size
    if len(x.coords) != presentation.dimension or x.width != width:
        raise DimensionMismatchException("Point does not match the presentation.")

    generator = z_generator_matrix(presentation).to_list()
    for column in range(len(generator[0])):
        total = sum(
            (
                x.coords[row] * int(generator[row][column])
                for row in range(len(generator))
            ),
            Fraction(0),
        )
        if total % 1:
            return False

    return True


def shift(x: TorusPoint, semigroup: FiniteSemigroup, s: int) -> TorusPoint:
    """Returns s.x, whose coordinate (i, t) is x_i(ts)."""
    if x.width != semigroup.size:
        raise DimensionMismatchException("Point does not match the semigroup.")

    return TorusPoint(
        tuple(
            x.coordinate(i, semigroup.multiply(t, s))
            for i in range(x.n)
            for t in semigroup.elements
        ),
        x.width,
    )


def character(x: TorusPoint) -> Callable[[Sequence[AlgElem]], Fraction]:
    """Returns the character of Z[S]^n given by pairing against x."""
    return lambda vector: torus_pair(x, vector)


def extract(
    chi: Callable[[Sequence[AlgElem]], Fraction],
    semigroup: FiniteSemigroup,
    n: int,
) -> TorusPoint:
    """Returns the point whose coordinate (j, t) is chi(delta_t e_j)."""
    zero = AlgElem.zero(semigroup)
    coords = []
    for j in range(n):
        for t in semigroup.elements:
            vector = [zero] * n
            vector[j] = AlgElem.delta(semigroup, t)
            coords.append(chi(vector))

    return TorusPoint.reduce(coords, semigroup.size)


def phi_roundtrip(
    x: TorusPoint,
    vector: Sequence[AlgElem],
    semigroup: FiniteSemigroup,
) -> Tuple[Fraction, TorusPoint]:
    """Returns the character of x evaluated at the vector, and the point re-extracted
    from that character.
    """
    chi = character(x)
    return chi(vector), extract(chi, semigroup, x.n)


def arc_point(
    functional: Sequence[Fraction], scale: Fraction, width: int
) -> TorusPoint:
    """Returns the reduction mod 1 of scale * f, for a rational annihilator vector f."""
    coords = [Fraction(scale) * Fraction(c) for c in functional]
    return TorusPoint.reduce(coords, width)


def functional_to_elements(
    functional: Sequence[Fraction],
    semigroup: FiniteSemigroup,
) -> List[AlgElem]:
    """Splits a flattened rational functional into a vector of Rat elements."""
    m = semigroup.size
    return [
        AlgElem.from_values(semigroup, dict(enumerate(functional[i : i + m])), Ring.RAT)
        for i in range(0, len(functional), m)
    ]
