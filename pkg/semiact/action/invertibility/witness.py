"""Implements right invertible witnesses B in A Z[S]^k, and lattice membership.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring, to_fraction
from semiact.action.duality.module import ModulePresentation, z_generator_matrix
from semiact.action.exceptions import (
    ConsistencyException,
    NoLeftIdentityException,
    ShapeMismatchException,
)
from sympy.polys.matrices.normalforms import hermite_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremBWitness:
    """An integral B in A Z[S]^n with right inverse C, so that B * C = Re{I}."""

    identity: AlgMat
    solution: AlgMat
    scalar: int
    b: AlgMat
    c: AlgMat
    two_sided: bool

    def to_report(self) -> model.report.TheoremB:
        return model.report.TheoremB(
            present=True,
            left_identity=self.identity[0, 0].to_document(),
            scalar=self.scalar,
            X=self.solution.to_document(),
            B=self.b.to_document(),
            C=self.c.to_document(),
            two_sided=self.two_sided,
        )


def module_membership(vector: Sequence[int], presentation: ModulePresentation) -> bool:
    """Decides whether an integer vector lies in the Z-span of the generators of J.

    The Hermite normal form H of G has one column per basis vector of the lattice,
    with the lowest non-zero entry of each column strictly below that of the columns
    to its left, so the coefficients are found by back substitution from the right.
    """
    if len(vector) != presentation.dimension:
        raise ShapeMismatchException(
            f"Expected a vector of length {presentation.dimension}, got {len(vector)}"
        )

    hnf = hermite_normal_form(z_generator_matrix(presentation)).to_list()
    residual = [int(v) for v in vector]
    columns = len(hnf[0]) if hnf else 0

    for column in range(columns - 1, -1, -1):
        entries = [int(row[column]) for row in hnf]
        pivot = max(i for i, value in enumerate(entries) if value)
        quotient, remainder = divmod(residual[pivot], entries[pivot])
        if remainder:
            return False
        residual = [r - quotient * e for r, e in zip(residual, entries)]

    return not any(residual)


def _integral(matrix: AlgMat) -> AlgMat:
    """Returns a Rat matrix with integral entries as an Int matrix."""
    rows = []
    for row in matrix.entries:
        entries = []
        for entry in row:
            values = {s: to_fraction(c) for s, c in entry.coeffs.items()}
            if any(v.denominator != 1 for v in values.values()):
                raise ConsistencyException(f"{entry} is not integral.")
            entries.append(AlgElem.from_values(entry.semigroup, values, Ring.INT))
        rows.append(entries)

    return AlgMat.from_rows(rows)


def theorem_b_witness(
    presentation: ModulePresentation,
) -> Optional[TheoremBWitness]:
    """Returns an integral B in A Z[S]^n with B * C = Re{I}, or None.

    I is the diagonal matrix of the canonical left identity e of Q[S]. In finite
    dimension A * X = Re{I} is solved exactly, and m clears every denominator of X and
    e, so that B = A * (mX) = m Re{I} and C = Re{I} / m.
    """
    semigroup = presentation.semigroup
    e = linear.solve_left_identity(semigroup)
    if e is None:
        raise NoLeftIdentityException("The convolution algebra has no left identity.")

    a = presentation.matrix.to_ring(Ring.RAT)
    identity = AlgMat.identity(e, presentation.n).real_part()
    solution = linear.right_inverse_solve(a, identity)
    if solution is None:
        logger.debug("A * X = Re{I} is inconsistent, no witness exists")
        return None

    denominators = [
        to_fraction(c).denominator
        for matrix in (solution, identity)
        for row in matrix.entries
        for entry in row
        for c in entry.coeffs.values()
    ]
    scalar = math.lcm(1, *denominators)

    b = _integral(a * solution.scale(scalar))
    c = identity.scale(Fraction(1, scalar))
    if b.to_ring(Ring.RAT) * c != identity:
        raise ConsistencyException("B * C differs from Re{I}.")

    for column in b.columns():
        if not module_membership(
            [int(v) for v in algmatrix.flatten(column)],
            ModulePresentation(semigroup, presentation.matrix),
        ):
            raise ConsistencyException("A column of B lies outside of A Z[S]^k.")

    two_sided = linear.is_two_sided_identity(e)
    if two_sided and c * b.to_ring(Ring.RAT) != identity:
        raise ConsistencyException("C * B differs from Re{I} for a unital algebra.")

    return TheoremBWitness(
        identity=identity,
        solution=solution,
        scalar=scalar,
        b=b,
        c=c,
        two_sided=two_sided,
    )
