"""Defines the coefficient rings of convolution algebras.

SPDX-License-Identifier: BSD-3-Clause
"""

import math
from enum import Enum
from fractions import Fraction
from typing import Any

from semiact.action.exceptions import RingMismatchException
from sympy import QQ, QQ_I, ZZ
from sympy.polys.domains.domain import Domain


class Ring(str, Enum):
    """The coefficient rings, in order of lossless embedding."""

    INT = "Int"
    RAT = "Rat"
    GAUSS_RAT = "GaussRat"
    FLOAT64_COMPLEX = "Float64Complex"

    @property
    def exact(self) -> bool:
        return self is not Ring.FLOAT64_COMPLEX

    @property
    def domain(self) -> Domain:
        """Returns the sympy domain housing exact coefficients."""
        domains = {Ring.INT: ZZ, Ring.RAT: QQ, Ring.GAUSS_RAT: QQ_I}
        try:
            return domains[self]
        except KeyError:
            raise RingMismatchException("Float64Complex has no exact domain.")

    @property
    def rank(self) -> int:
        return list(Ring).index(self)

    def embeds_into(self, other: "Ring") -> bool:
        return self.rank <= other.rank

    def zero(self) -> Any:
        if self is Ring.FLOAT64_COMPLEX:
            return complex(0)

        return self.domain.zero

    def one(self) -> Any:
        if self is Ring.FLOAT64_COMPLEX:
            return complex(1)

        return self.domain.one

    def convert(self, value: Any, source: "Ring") -> Any:
        """Embeds a coefficient of the source ring into this ring."""
        if not source.embeds_into(self):
            raise RingMismatchException(
                f"{source.value} does not embed into {self.value}"
            )

        if self is Ring.FLOAT64_COMPLEX:
            if source is Ring.FLOAT64_COMPLEX:
                return complex(value)
            if source is Ring.GAUSS_RAT:
                return complex(float(value.x), float(value.y))

            return complex(float(value))

        return self.domain.convert_from(value, source.domain)

    def coerce(self, value: Any) -> Any:
        """Converts a plain Python number (int, Fraction or complex) into this ring."""
        if self is Ring.FLOAT64_COMPLEX:
            return complex(value)

        if isinstance(value, complex):
            if self is not Ring.GAUSS_RAT:
                raise RingMismatchException(f"Complex value {value} in {self.value}")
            return QQ_I(
                QQ(*value.real.as_integer_ratio()),
                QQ(*value.imag.as_integer_ratio()),
            )

        if hasattr(value, "denominator"):
            value = to_fraction(value)
        else:
            value = Fraction(value)

        if self is Ring.INT and value.denominator != 1:
            raise RingMismatchException(f"Non-integral value {value} in Int")

        return self.domain.convert_from(QQ(value.numerator, value.denominator), QQ)

    def modulus(self, value: Any) -> float:
        """Returns |value| as a float."""
        if self is Ring.GAUSS_RAT:
            return math.sqrt(float(value.x * value.x + value.y * value.y))

        return float(abs(value))

    def modulus_bound(self, value: Any) -> Any:
        """Returns an exact upper bound of |value|, |re| + |im| for Gaussian values."""
        if self is Ring.GAUSS_RAT:
            return abs(value.x) + abs(value.y)
        if self is Ring.FLOAT64_COMPLEX:
            return abs(value.real) + abs(value.imag)

        return abs(value)

    def squared_modulus(self, value: Any) -> Any:
        """Returns |value|^2, exactly for exact rings."""
        if self is Ring.GAUSS_RAT:
            return value.x * value.x + value.y * value.y
        if self is Ring.FLOAT64_COMPLEX:
            return abs(value) ** 2

        return value * value

    def real(self, value: Any) -> Any:
        if self is Ring.GAUSS_RAT:
            return QQ_I(value.x, QQ.zero)
        if self is Ring.FLOAT64_COMPLEX:
            return complex(value.real)

        return value

    def imag(self, value: Any) -> Any:
        if self is Ring.GAUSS_RAT:
            return QQ_I(value.y, QQ.zero)
        if self is Ring.FLOAT64_COMPLEX:
            return complex(value.imag)

        return self.zero()


def to_fraction(value: Any) -> Fraction:
    """Converts an exact integer or rational coefficient to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def common(left: Ring, right: Ring) -> Ring:
    """Returns the smallest ring both rings embed into."""
    return left if right.embeds_into(left) else right
