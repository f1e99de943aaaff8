"""Implements finitely supported elements of R[S] for finite semigroups S.

Elements of l-infinity(S) share the same representation, as S is finite.

SPDX-License-Identifier: BSD-3-Clause
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Sequence

from semiact.action import model
from semiact.action.algebra.ring import Ring, to_fraction
from semiact.action.exceptions import (
    DimensionMismatchException,
    DocumentException,
    OutOfRangeException,
    RingMismatchException,
    ValidationException,
)
from semiact.action.semigroup.table import FiniteSemigroup


@dataclass(frozen=True, eq=False)
class AlgElem:
    """A sparse map from element index to coefficient, with no stored zeros."""

    semigroup: FiniteSemigroup
    ring: Ring
    coeffs: Mapping[int, Any]

    def __post_init__(self):
        cleaned = {s: c for s, c in sorted(self.coeffs.items()) if c}
        for s in cleaned:
            if s < 0 or s >= self.semigroup.size:
                raise OutOfRangeException(f"Element index {s} is out of range.")
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def zero(cls, semigroup: FiniteSemigroup, ring: Ring = Ring.INT) -> "AlgElem":
        return cls(semigroup, ring, {})

    @classmethod
    def delta(
        cls,
        semigroup: FiniteSemigroup,
        s: int,
        ring: Ring = Ring.INT,
        coefficient: Any = 1,
    ) -> "AlgElem":
        """Returns coefficient * delta_s."""
        return cls(semigroup, ring, {s: ring.coerce(coefficient)})

    @classmethod
    def indicator(
        cls,
        semigroup: FiniteSemigroup,
        elements: Iterable[int],
        ring: Ring = Ring.INT,
    ) -> "AlgElem":
        """Returns 1_F."""
        return cls(semigroup, ring, {s: ring.one() for s in set(elements)})

    @classmethod
    def from_values(
        cls,
        semigroup: FiniteSemigroup,
        values: Mapping[int, Any],
        ring: Ring = Ring.INT,
    ) -> "AlgElem":
        """Builds an element from plain Python numbers."""
        return cls(semigroup, ring, {s: ring.coerce(v) for s, v in values.items()})

    @classmethod
    def from_vector(
        cls,
        semigroup: FiniteSemigroup,
        vector: Sequence[Any],
        ring: Ring,
    ) -> "AlgElem":
        """Builds an element from a dense vector of ring coefficients in table order."""
        if len(vector) != semigroup.size:
            raise DimensionMismatchException(
                f"Expected {semigroup.size} coefficients, got {len(vector)}"
            )
        return cls(semigroup, ring, dict(enumerate(vector)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented

        return (
            self.ring is other.ring
            and self.semigroup == other.semigroup
            and dict(self.coeffs) == dict(other.coeffs)
        )

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*d{s}" for s, c in self.coeffs.items()) or "0"
        return f"AlgElem({self.ring.value}: {terms})"

    def coefficient(self, s: int) -> Any:
        return self.coeffs.get(s, self.ring.zero())

    @property
    def support(self) -> Sequence[int]:
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> list:
        """Returns the dense coefficient vector in table order."""
        return [self.coefficient(s) for s in self.semigroup.elements]

    def _check(self, other: "AlgElem"):
        if self.ring is not other.ring:
            raise RingMismatchException(
                f"Ring mismatch: {self.ring.value} and {other.ring.value}"
            )
        if self.semigroup is not other.semigroup and self.semigroup != other.semigroup:
            raise RingMismatchException("Elements belong to different semigroups.")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        result: Dict[int, Any] = dict(self.coeffs)
        for s, c in other.coeffs.items():
            result[s] = result.get(s, self.ring.zero()) + c

        return AlgElem(self.semigroup, self.ring, result)

    def __neg__(self) -> "AlgElem":
        coeffs = {s: -c for s, c in self.coeffs.items()}
        return AlgElem(self.semigroup, self.ring, coeffs)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        return convolve(self, other)

    def scale(self, scalar: Any) -> "AlgElem":
        """Returns scalar * self, for a plain number or a ring coefficient."""
        if isinstance(scalar, (int, Fraction, float, complex)):
            scalar = self.ring.coerce(scalar)

        return AlgElem(
            self.semigroup,
            self.ring,
            {s: scalar * c for s, c in self.coeffs.items()},
        )

    def to_ring(self, ring: Ring) -> "AlgElem":
        """Embeds the element losslessly into a larger ring."""
        return AlgElem(
            self.semigroup,
            ring,
            {s: ring.convert(c, self.ring) for s, c in self.coeffs.items()},
        )

    def real_part(self) -> "AlgElem":
        return AlgElem(
            self.semigroup,
            self.ring,
            {s: self.ring.real(c) for s, c in self.coeffs.items()},
        )

    def imag_part(self) -> "AlgElem":
        return AlgElem(
            self.semigroup,
            self.ring,
            {s: self.ring.imag(c) for s, c in self.coeffs.items()},
        )

    def restrict(self, elements: Iterable[int]) -> "AlgElem":
        """Returns f * 1_F."""
        keep = set(elements)
        return AlgElem(
            self.semigroup,
            self.ring,
            {s: c for s, c in self.coeffs.items() if s in keep},
        )

    def norm_l1(self) -> Any:
        """Returns the l1 norm, exactly for Int and Rat and as a float otherwise."""
        if self.ring in (Ring.INT, Ring.RAT):
            return sum((abs(c) for c in self.coeffs.values()), self.ring.zero())

        return sum(self.ring.modulus(c) for c in self.coeffs.values())

    def norm_l1_bound(self) -> Any:
        """Returns the sum of |re| + |im| over all coefficients, bounding l1."""
        return sum(
            (self.ring.modulus_bound(c) for c in self.coeffs.values()),
            Ring.RAT.zero() if self.ring.exact else 0.0,
        )

    def norm_inf(self) -> Any:
        """Returns the l-infinity norm, exact for Int and Rat, a float otherwise."""
        if not self.coeffs:
            return self.ring.zero() if self.ring in (Ring.INT, Ring.RAT) else 0.0

        if self.ring in (Ring.INT, Ring.RAT):
            return max(abs(c) for c in self.coeffs.values())

        return max(self.ring.modulus(c) for c in self.coeffs.values())

    def to_document(self) -> model.algebra.Element:
        """Returns the element as a document, for exact rings only."""
        if not self.ring.exact:
            raise RingMismatchException("Float64Complex elements cannot be serialised.")

        coeffs = {}
        for s, c in self.coeffs.items():
            if self.ring is Ring.GAUSS_RAT:
                re, im = to_fraction(c.x), to_fraction(c.y)
                coeffs[str(s)] = [
                    re.numerator,
                    re.denominator,
                    im.numerator,
                    im.denominator,
                ]
            else:
                value = to_fraction(c)
                coeffs[str(s)] = [value.numerator, value.denominator]

        return model.algebra.Element(ring=self.ring.value, coeffs=coeffs)


def from_document(
    document: model.algebra.Element,
    semigroup: FiniteSemigroup,
) -> AlgElem:
    """Builds an element over the given semigroup from a document."""
    ring = Ring(document.ring)
    values = {}

    for index, value in document.coeffs.items():
        if any(den == 0 for den in value[1::2]):
            raise DocumentException(f"Zero denominator in coefficient of {index}")

        if ring is Ring.GAUSS_RAT:
            values[int(index)] = ring.domain(
                Ring.RAT.coerce(Fraction(value[0], value[1])),
                Ring.RAT.coerce(Fraction(value[2], value[3])),
            )
            continue

        number = Fraction(value[0], value[1])
        if ring is Ring.INT and number.denominator != 1:
            raise ValidationException(f"Coefficient of {index} is not an integer.")
        values[int(index)] = ring.coerce(number)

    return AlgElem(semigroup, ring, values)


def convolve(a: AlgElem, b: AlgElem) -> AlgElem:
    """Returns a * b, where (a * b)(s) is the sum of a(r)b(t) over rt = s."""
    a._check(b)
    result: Dict[int, Any] = {}
    for r, x in a.coeffs.items():
        for t, y in b.coeffs.items():
            s = a.semigroup.multiply(r, t)
            result[s] = result.get(s, a.ring.zero()) + x * y

    return AlgElem(a.semigroup, a.ring, result)


def dual_convolve(f: AlgElem, a: AlgElem) -> AlgElem:
    """Returns f * a, where (f * a)(s) is the sum of f(ts)a(t) over t."""
    f._check(a)
    result = {}
    for s in f.semigroup.elements:
        total = f.ring.zero()
        for t, y in a.coeffs.items():
            total += f.coefficient(f.semigroup.multiply(t, s)) * y
        result[s] = total

    return AlgElem(f.semigroup, f.ring, result)


def dual_pair(f: AlgElem, a: AlgElem) -> Any:
    """Returns the canonical dual pairing, the sum of f(t)a(t) over t."""
    f._check(a)
    total = f.ring.zero()
    for t, y in a.coeffs.items():
        total += f.coefficient(t) * y

    return total


def vector_pair(fs: Sequence[AlgElem], bs: Sequence[AlgElem]) -> Any:
    """Returns the pairing of two vectors, the sum of their coordinate pairings."""
    if len(fs) != len(bs):
        raise DimensionMismatchException(f"Vectors of length {len(fs)} and {len(bs)}")
    if not fs:
        raise DimensionMismatchException("Cannot pair empty vectors.")

    total = fs[0].ring.zero()
    for f, b in zip(fs, bs):
        total += dual_pair(f, b)

    return total
