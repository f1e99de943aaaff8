"""Implements Neumann series refinement of right inverses in floating point.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging

from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring
from semiact.action.constants import (
    FLOAT_SLACK,
    NEUMANN_MAX_TERMS,
    NEUMANN_TOLERANCE,
)
from semiact.action.exceptions import (
    BudgetException,
    NotContractiveException,
    PreconditionViolatedException,
)

logger = logging.getLogger(__name__)


def neumann_refine(
    a: AlgMat,
    x: AlgMat,
    a_inv: AlgMat,
    e: AlgMat,
    tol: float = NEUMANN_TOLERANCE,
    max_terms: int = NEUMANN_MAX_TERMS,
) -> AlgMat:
    """Returns a right e-inverse of a - x, given a right e-inverse of a.

    The partial sums a_inv + a_inv y + ... + a_inv y^N with y = x a_inv are used, and
    N is chosen from the geometric tail bound q^(N+1) / (1 - q) with q = |y|_1.
    """
    a, x, a_inv, e = (m.to_ring(Ring.FLOAT64_COMPLEX) for m in (a, x, a_inv, e))

    initial = (a * a_inv - e).norm_l1()
    if initial > tol:
        raise PreconditionViolatedException(
            f"a * a_inv differs from e by {initial}, more than {tol}"
        )

    y = x * a_inv
    q = y.norm_l1()
    if q >= 1:
        raise NotContractiveException(f"|x a_inv|_1 = {q} is not less than one")

    if x.is_zero():
        return a_inv

    total = a_inv
    term = a_inv
    for count in range(1, max_terms + 1):
        term = term * y
        total = total + term
        if q ** (count + 1) / (1 - q) <= tol:
            logger.debug(f"Neumann series converged after {count} terms")
            break
    else:
        raise BudgetException(f"Tail bound not below {tol} after {max_terms} terms")

    residual = ((a - x) * total - e).norm_l1()
    if residual > tol + initial / (1 - q) + FLOAT_SLACK:
        raise BudgetException(f"Measured residual {residual} exceeds {tol}")

    return total
