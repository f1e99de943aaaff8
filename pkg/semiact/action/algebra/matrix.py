"""Implements matrices over convolution algebras.

SPDX-License-Identifier: BSD-3-Clause
"""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from semiact.action import model
from semiact.action.algebra import element
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.ring import Ring
from semiact.action.exceptions import (
    DimensionMismatchException,
    RingMismatchException,
)
from semiact.action.semigroup.table import FiniteSemigroup
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True, eq=False)
class AlgMat:
    """An n x k matrix over R[S], with every entry sharing a semigroup and ring."""

    semigroup: FiniteSemigroup
    ring: Ring
    entries: Tuple[Tuple[AlgElem, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionMismatchException("Matrices must be at least 1x1.")

        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise DimensionMismatchException("Ragged matrix rows.")
            for entry in row:
                if entry.ring is not self.ring:
                    raise RingMismatchException("Matrix entries must share a ring.")
                if entry.semigroup != self.semigroup:
                    raise RingMismatchException(
                        "Matrix entries must share a semigroup."
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[AlgElem]]) -> "AlgMat":
        if not rows or not rows[0]:
            raise DimensionMismatchException("Matrices must be at least 1x1.")

        first = rows[0][0]
        return cls(first.semigroup, first.ring, tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(
        cls,
        semigroup: FiniteSemigroup,
        rows: int,
        cols: int,
        ring: Ring = Ring.INT,
    ) -> "AlgMat":
        zero = AlgElem.zero(semigroup, ring)
        return cls(semigroup, ring, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, e: AlgElem, n: int) -> "AlgMat":
        """Returns the n x n diagonal matrix with e on the diagonal."""
        zero = AlgElem.zero(e.semigroup, e.ring)
        return cls(
            e.semigroup,
            e.ring,
            tuple(tuple(e if i == j else zero for j in range(n)) for i in range(n)),
        )

    @classmethod
    def column(cls, vector: Sequence[AlgElem]) -> "AlgMat":
        return cls.from_rows([[entry] for entry in vector])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, index: Tuple[int, int]) -> AlgElem:
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgMat):
            return NotImplemented

        if (self.rows, self.cols) != (other.rows, other.cols):
            return False

        return self.ring is other.ring and all(
            x == y
            for left, right in zip(self.entries, other.entries)
            for x, y in zip(left, right)
        )

    def __repr__(self) -> str:
        return f"AlgMat({self.rows}x{self.cols}, {[list(r) for r in self.entries]})"

    def _map(self, function) -> "AlgMat":
        return AlgMat.from_rows([[function(x) for x in row] for row in self.entries])

    def _zip(self, other: "AlgMat", function) -> "AlgMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchException(
                f"Cannot combine {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )

        return AlgMat.from_rows(
            [
                [function(x, y) for x, y in zip(left, right)]
                for left, right in zip(self.entries, other.entries)
            ]
        )

    def __add__(self, other: "AlgMat") -> "AlgMat":
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: "AlgMat") -> "AlgMat":
        return self._zip(other, lambda x, y: x - y)

    def __mul__(self, other: "AlgMat") -> "AlgMat":
        return matrix_multiply(self, other)

    def scale(self, scalar: Any) -> "AlgMat":
        return self._map(lambda x: x.scale(scalar))

    def to_ring(self, ring: Ring) -> "AlgMat":
        return self._map(lambda x: x.to_ring(ring))

    def real_part(self) -> "AlgMat":
        return self._map(lambda x: x.real_part())

    def columns(self) -> List[List[AlgElem]]:
        return [[row[j] for row in self.entries] for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def norm_l1(self) -> Any:
        """Returns the sum of the l1 norms of every entry."""
        norms = [x.norm_l1() for row in self.entries for x in row]
        return sum(norms[1:], norms[0])

    def to_document(self) -> model.algebra.Matrix:
        return model.algebra.Matrix(
            rows=self.rows,
            cols=self.cols,
            entries=[[x.to_document() for x in row] for row in self.entries],
        )


def from_document(
    document: model.algebra.Matrix,
    semigroup: FiniteSemigroup,
) -> AlgMat:
    """Builds a matrix over the given semigroup from a document.

    Entries over smaller rings are embedded into the largest ring present.
    """
    rows = [
        [element.from_document(entry, semigroup) for entry in row]
        for row in document.entries
    ]
    ring = max((x.ring for row in rows for x in row), key=lambda r: r.rank)

    return AlgMat.from_rows([[x.to_ring(ring) for x in row] for row in rows])


def matrix_multiply(a: AlgMat, b: AlgMat) -> AlgMat:
    """Returns A * B with entries the sum of a_ih * b_hj over h."""
    if a.cols != b.rows:
        raise DimensionMismatchException(
            f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    if a.ring is not b.ring:
        raise RingMismatchException(f"Ring mismatch: {a.ring.value} and {b.ring.value}")

    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            total = AlgElem.zero(a.semigroup, a.ring)
            for h in range(a.cols):
                total = total + a[i, h] * b[h, j]
            row.append(total)
        rows.append(row)

    return AlgMat.from_rows(rows)


def matrix_dual_apply(fs: Sequence[AlgElem], a: AlgMat) -> List[AlgElem]:
    """Returns the vector f * A, whose j-th entry is the sum of f_i * a_ij over i."""
    if len(fs) != a.rows:
        raise DimensionMismatchException(
            f"Cannot apply a vector of length {len(fs)} to {a.rows}x{a.cols}"
        )

    result = []
    for j in range(a.cols):
        total = AlgElem.zero(a.semigroup, a.ring)
        for i, f in enumerate(fs):
            total = total + element.dual_convolve(f, a[i, j])
        result.append(total)

    return result


def apply(a: AlgMat, vector: Sequence[AlgElem]) -> List[AlgElem]:
    """Returns A * b for a column vector b."""
    product = matrix_multiply(a, AlgMat.column(vector))
    return [row[0] for row in product.entries]


def flatten(vector: Sequence[AlgElem]) -> list:
    """Flattens a vector coordinate major and element minor."""
    return [c for entry in vector for c in entry.vector()]


def unflatten(
    values: Sequence[Any],
    semigroup: FiniteSemigroup,
    ring: Ring,
) -> List[AlgElem]:
    """Inverts `flatten`."""
    m = semigroup.size
    if len(values) % m:
        raise DimensionMismatchException(f"{len(values)} is not a multiple of {m}")

    return [
        AlgElem.from_vector(semigroup, list(values[i : i + m]), ring)
        for i in range(0, len(values), m)
    ]


def left_multiplication_matrix(a: AlgMat) -> DomainMatrix:
    """Returns the (n|S|) x (k|S|) matrix of b -> A * b in the flattened coordinates.

    Column (j, t) is the flattening of A * (delta_t e_j). Over Int this is the
    Z-generator matrix of A Z[S]^k.
    """
    semigroup = a.semigroup
    m = semigroup.size
    domain = a.ring.domain
    grid = [[domain.zero] * (a.cols * m) for _ in range(a.rows * m)]

    for i in range(a.rows):
        for j in range(a.cols):
            for r, c in a[i, j].coeffs.items():
                for t in semigroup.elements:
                    grid[i * m + semigroup.multiply(r, t)][j * m + t] += c

    return DomainMatrix(grid, (a.rows * m, a.cols * m), domain)
