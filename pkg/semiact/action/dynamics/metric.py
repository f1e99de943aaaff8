"""Implements the metric on (T^S)^n and the separation of pairs under the shift.

The metric depends on the enumeration of S, which is the table order. Element s
carries the weight 2^-(s + 1).

SPDX-License-Identifier: BSD-3-Clause
"""

from fractions import Fraction

from semiact.action.duality.torus import TorusPoint, shift
from semiact.action.exceptions import ShapeMismatchException
from semiact.action.semigroup.table import FiniteSemigroup


def rho(a: Fraction, b: Fraction) -> Fraction:
    """Returns the distance between a and b on R / Z."""
    difference = abs(Fraction(a) % 1 - Fraction(b) % 1)
    return min(difference, 1 - difference)


def metric_d(x: TorusPoint, y: TorusPoint) -> Fraction:
    """Returns the maximum over coordinates j of the weighted sum over elements s."""
    if (x.width, len(x.coords)) != (y.width, len(y.coords)):
        raise ShapeMismatchException("Points do not share a shape.")

    best = Fraction(0)
    for j in range(x.n):
        total = Fraction(0)
        for s in range(x.width):
            distance = rho(x.coordinate(j, s), y.coordinate(j, s))
            if distance:
                total += distance / (2 ** (s + 1) * (1 + distance))
        best = max(best, total)

    return best


def separation(x: TorusPoint, y: TorusPoint, semigroup: FiniteSemigroup) -> Fraction:
    """Returns the maximum of d(s.x, s.y) over every s in S.

    The unshifted distance is not included unless S has a left identity element.
    """
    if (x.width, len(x.coords)) != (y.width, len(y.coords)):
        raise ShapeMismatchException("Points do not share a shape.")

    return max(
        metric_d(shift(x, semigroup, s), shift(y, semigroup, s))
        for s in semigroup.elements
    )
