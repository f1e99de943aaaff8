"""Implements the Smith normal form structure of Z^(n|S|) / J and the points of X_J.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from semiact.action.constants import ENUMERATION_BUDGET
from semiact.action.duality.module import ModulePresentation, z_generator_matrix
from semiact.action.duality.torus import TorusPoint
from semiact.action.exceptions import ConsistencyException
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)


def normalize_factors(diagonal: Sequence[int]) -> Tuple[int, ...]:
    """Returns the invariant factors greater than one of a diagonal, as a chain.

    Pairs are replaced by their gcd and lcm until every factor divides the next.
    """
    factors = sorted(abs(d) for d in diagonal if d)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            factors[i], factors[j] = math.gcd(a, b), a * b // math.gcd(a, b)

    return tuple(d for d in factors if d > 1)


@dataclass(frozen=True)
class DualGroupStructure:
    """The decomposition X_J = Z/d_1 + ... + Z/d_r + T^free_rank.

    `transform` and `cotransform` are the unimodular U and V with U G V = `diagonal`.
    """

    invariant_factors: Tuple[int, ...]
    free_rank: int
    rank: int
    diagonal: Tuple[int, ...]
    transform: Tuple[Tuple[int, ...], ...]
    cotransform: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> Optional[int]:
        """Returns |X_J|, or None when X_J is infinite."""
        if self.free_rank:
            return None

        return math.prod(self.invariant_factors)

    def check(self, generator: DomainMatrix) -> bool:
        """Re-checks that U G V is the diagonal and that U and V are unimodular."""
        rows, cols = generator.shape
        u = DomainMatrix(
            [[ZZ(x) for x in row] for row in self.transform], (rows, rows), ZZ
        )
        v = DomainMatrix(
            [[ZZ(x) for x in row] for row in self.cotransform], (cols, cols), ZZ
        )
        product_ = (u * generator.convert_to(ZZ) * v).to_list()

        for i in range(rows):
            for j in range(cols):
                expected = self.diagonal[i] if i == j and i < len(self.diagonal) else 0
                if product_[i][j] != expected:
                    return False

        return abs(u.det()) == 1 and abs(v.det()) == 1


def dual_group_structure(presentation: ModulePresentation) -> DualGroupStructure:
    """Computes the Smith normal form of the Z-generator matrix of J."""
    generator = z_generator_matrix(presentation)
    rows, cols = generator.shape
    _, u, v = smith_normal_decomp(generator)

    transform = tuple(tuple(int(x) for x in row) for row in u.to_list())
    cotransform = tuple(tuple(int(x) for x in row) for row in v.to_list())
    reduced = (u * generator * v).to_list()
    diagonal = tuple(int(reduced[i][i]) for i in range(min(rows, cols)))
    rank = sum(1 for d in diagonal if d)

    structure = DualGroupStructure(
        invariant_factors=normalize_factors(diagonal),
        free_rank=rows - rank,
        rank=rank,
        diagonal=diagonal,
        transform=transform,
        cotransform=cotransform,
    )
    if not structure.check(generator):
        raise ConsistencyException("Smith normal form transforms failed to verify.")

    logger.debug(
        f"Dual group has invariant factors {structure.invariant_factors} and free rank "
        f"{structure.free_rank}"
    )
    return structure


def enumerate_dual(
    presentation: ModulePresentation,
    budget: int = ENUMERATION_BUDGET,
    structure: Optional[DualGroupStructure] = None,
) -> Tuple[Optional[List[TorusPoint]], Optional[str]]:
    """Returns every point of X_J when it is finite and within budget.

    With U G V = D, a point x solves G^T x = 0 mod 1 exactly when y = U^-T x has
    y_i in (1/d_i)Z for every non-zero d_i, so x = U^T y ranges over a finite grid.
    Returns the sorted points, or None with the reason.
    """
    structure = structure or dual_group_structure(presentation)
    if structure.free_rank:
        return None, "infinite"

    order = structure.order
    if order > budget:
        logger.warning(f"X_J has {order} points, more than the budget of {budget}")
        return None, "over budget"

    dimension = presentation.dimension
    torsion = [(i, abs(d)) for i, d in enumerate(structure.diagonal) if abs(d) > 1]
    width = presentation.semigroup.size

    points = []
    for numerators in product(*(range(d) for _, d in torsion)):
        y = [Fraction(0)] * dimension
        for (i, d), c in zip(torsion, numerators):
            y[i] = Fraction(c, d)
        x = [
            sum((structure.transform[i][j] * y[i] for i, _ in torsion), Fraction(0))
            for j in range(dimension)
        ]
        points.append(TorusPoint.reduce(x, width))

    return sorted(points, key=lambda p: p.coords), None
