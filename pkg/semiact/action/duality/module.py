"""Implements finitely generated right submodules J = A Z[S]^k of Z[S]^n.

Vectors of R[S]^n are flattened coordinate major and element minor, so coordinate
(i, s) sits at index i * |S| + s.

SPDX-License-Identifier: BSD-3-Clause
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring, to_fraction
from semiact.action.exceptions import RingMismatchException
from semiact.action.semigroup.table import FiniteSemigroup
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class ModulePresentation:
    """The presentation of J = A Z[S]^k by an n x k matrix A over Z[S].

    When `generated` is set, J is the right submodule generated by the columns of A,
    which also contains the columns themselves. The two agree for monoids, but differ
    for semigroups such as null semigroups where SS != S.
    """

    semigroup: FiniteSemigroup
    matrix: AlgMat
    generated: bool = False

    def __post_init__(self):
        if self.matrix.ring is not Ring.INT:
            raise RingMismatchException("Presentation matrices must be over Int.")
        if self.matrix.semigroup != self.semigroup:
            raise RingMismatchException(
                "Presentation matrix is over another semigroup."
            )

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def k(self) -> int:
        return self.matrix.cols

    @property
    def dimension(self) -> int:
        """Returns n |S|, the number of torus coordinates of a point of X_J."""
        return self.n * self.semigroup.size

    def to_document(self) -> model.presentation.Document:
        return model.presentation.Document(
            semigroup=self.semigroup.to_document(),
            matrix=self.matrix.to_document(),
            generated=self.generated,
        )


def z_generator_matrix(presentation: ModulePresentation) -> DomainMatrix:
    """Returns the integer matrix whose columns span J over Z.

    Column (j, t) is the flattening of A * (delta_t e_j). Generated presentations
    append the k flattened columns of A.
    """
    generator = algmatrix.left_multiplication_matrix(presentation.matrix)
    if not presentation.generated:
        return generator

    columns = [algmatrix.flatten(column) for column in presentation.matrix.columns()]
    extra = DomainMatrix(
        [list(row) for row in zip(*columns)],
        (presentation.dimension, presentation.k),
        generator.domain,
    )
    return generator.hstack(extra)


def annihilator(presentation: ModulePresentation) -> List[List[Fraction]]:
    """Returns a rational basis of the annihilator, the left kernel of G.

    As G is integral, the complex annihilator is this rational kernel tensored with C.
    """
    generator = z_generator_matrix(presentation)
    basis = linear.nullspace_basis(generator.transpose())

    return [[to_fraction(c) for c in vector] for vector in basis]
