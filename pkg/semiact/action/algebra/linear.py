"""Implements exact linear solves over convolution algebras.

Every solve is reduced to a linear system over a field and answered with the
particular solution of the reduced row echelon form, setting free variables to zero.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from typing import Any, List, Optional, Sequence

from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring, common
from semiact.action.exceptions import (
    ConsistencyException,
    DimensionMismatchException,
)
from semiact.action.semigroup.table import FiniteSemigroup, classify
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)


def field_ring(ring: Ring) -> Ring:
    """Returns the smallest exact field containing the ring."""
    return Ring.RAT if ring is Ring.INT else ring


def particular_solution(
    system: DomainMatrix, rhs: Sequence[Any]
) -> Optional[List[Any]]:
    """Solves system * x = rhs over the field of the system, or returns None.

    The solution is read from the reduced row echelon form of the augmented matrix,
    with every free variable set to zero.
    """
    system = system.to_field()
    domain = system.domain
    rows, cols = system.shape
    if len(rhs) != rows:
        raise DimensionMismatchException(f"Expected {rows} right hand sides.")

    column = DomainMatrix([[domain.convert(v)] for v in rhs], (rows, 1), domain)
    reduced, pivots = system.hstack(column).rref(method="GJ")
    if cols in pivots:
        return None

    grid = reduced.to_list()
    solution = [domain.zero] * cols
    for row, pivot in enumerate(pivots):
        solution[pivot] = grid[row][cols]

    return solution


def nullspace_basis(system: DomainMatrix) -> List[List[Any]]:
    """Returns a basis of the right kernel, one vector per free column.

    Each basis vector has a one at its free column and zeros at every other free column.
    """
    system = system.to_field()
    domain = system.domain
    _, cols = system.shape
    reduced, pivots = system.rref(method="GJ")
    grid = reduced.to_list()

    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vector = [domain.zero] * cols
        vector[free] = domain.one
        for row, pivot in enumerate(pivots):
            vector[pivot] = -grid[row][free]
        basis.append(vector)

    return basis


def rank(system: DomainMatrix) -> int:
    return len(system.to_field().rref(method="GJ")[1])


def _identity_system(semigroup: FiniteSemigroup, two_sided: bool, ring: Ring):
    """Builds the equations e * delta_s = delta_s (and delta_s * e = delta_s)."""
    m = semigroup.size
    domain = ring.domain
    rows = []
    rhs = []

    sides = [lambda r, s: semigroup.multiply(r, s)]
    if two_sided:
        sides.append(lambda r, s: semigroup.multiply(s, r))

    for side in sides:
        for s in semigroup.elements:
            block = [[domain.zero] * m for _ in range(m)]
            for r in semigroup.elements:
                block[side(r, s)][r] += domain.one
            rows.extend(block)
            rhs.extend(
                domain.one if u == s else domain.zero for u in semigroup.elements
            )

    return DomainMatrix(rows, (len(rows), m), domain), rhs


def solve_left_identity(
    semigroup: FiniteSemigroup,
    two_sided: bool = False,
    ring: Ring = Ring.RAT,
) -> Optional[AlgElem]:
    """Returns a left (or two-sided) identity of the convolution algebra, if any."""
    ring = field_ring(ring)
    system, rhs = _identity_system(semigroup, two_sided, ring)
    solution = particular_solution(system, rhs)
    if solution is None:
        logger.debug(f"No {'two-sided' if two_sided else 'left'} identity exists")
        return None

    return AlgElem.from_vector(semigroup, solution, ring)


def is_left_identity(e: AlgElem) -> bool:
    """Checks e * delta_s = delta_s for every s by direct convolution."""
    deltas = [AlgElem.delta(e.semigroup, s, e.ring) for s in e.semigroup.elements]
    return all(e * delta == delta for delta in deltas)


def is_two_sided_identity(e: AlgElem) -> bool:
    """Checks e * delta_s = delta_s * e = delta_s for every s by direct convolution."""
    deltas = [AlgElem.delta(e.semigroup, s, e.ring) for s in e.semigroup.elements]
    return is_left_identity(e) and all(delta * e == delta for delta in deltas)


def right_inverse_solve(a: AlgMat, e: AlgMat) -> Optional[AlgMat]:
    """Solves A * X = E over the field of fractions, or returns None.

    A is n x k and E is n x l, giving a k x l solution.
    """
    if a.rows != e.rows:
        raise DimensionMismatchException(
            f"Cannot solve {a.rows}x{a.cols} * X = {e.rows}x{e.cols}"
        )

    ring = field_ring(common(a.ring, e.ring))
    a = a.to_ring(ring)
    e = e.to_ring(ring)
    system = algmatrix.left_multiplication_matrix(a)

    columns = []
    for column in e.columns():
        solution = particular_solution(system, algmatrix.flatten(column))
        if solution is None:
            return None
        columns.append(algmatrix.unflatten(solution, a.semigroup, ring))

    return AlgMat.from_rows(
        [[columns[j][i] for j in range(e.cols)] for i in range(a.cols)]
    )


def cancellative_consistency(semigroup: FiniteSemigroup) -> Optional[bool]:
    """Cross-checks the equivalent criteria for a finite cancellative semigroup.

    Such a semigroup is expansive if and only if its convolution algebra has a left
    identity, if and only if it is a monoid. Returns None if S is not cancellative.
    """
    flags = classify(semigroup)
    if not flags.is_cancellative:
        return None

    statements = {
        "expansive": flags.is_expansive,
        "left identity": solve_left_identity(semigroup) is not None,
        "monoid": flags.is_monoid,
    }
    if len(set(statements.values())) != 1:
        raise ConsistencyException(f"Cancellative criteria disagree: {statements}")

    return True
