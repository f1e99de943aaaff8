"""Decides expansivity of the shift action on X_J, with certificates.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from semiact.action import helper, model
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.constants import ENUMERATION_BUDGET
from semiact.action.duality.module import ModulePresentation, annihilator
from semiact.action.duality.structure import dual_group_structure, enumerate_dual
from semiact.action.duality.torus import TorusPoint
from semiact.action.dynamics.metric import separation
from semiact.action.exceptions import (
    ConsistencyException,
    PreconditionViolatedException,
)
from semiact.action.semigroup.cover import left_cover_check, minimal_left_cover
from semiact.action.semigroup.table import FiniteSemigroup, product_set

logger = logging.getLogger(__name__)


def optimal_constant(
    presentation: ModulePresentation,
    points: List[TorusPoint],
) -> Tuple[Optional[Fraction], Optional[TorusPoint]]:
    """Returns the optimal expansivity constant of X_J, and a point attaining it.

    As d is translation invariant and the shift is additive, the minimum over pairs
    is the minimum over non-zero z of the separation of z from zero. Returns None
    when X_J = {0}.
    """
    semigroup = presentation.semigroup
    best: Optional[Fraction] = None
    witness: Optional[TorusPoint] = None

    for point in points:
        if point.is_zero():
            continue

        value = separation(point, TorusPoint.zero(point.n, point.width), semigroup)
        if best is None or value < best:
            best, witness = value, point
            if best == 0:
                break

    return best, witness


def prefix_rank(elements: Iterable[int]) -> int:
    """Returns the length r of the shortest enumeration prefix containing K."""
    return max(elements) + 1


def theoretical_constant(
    presentation: ModulePresentation,
    elements: Iterable[int],
) -> Fraction:
    """Returns 1 / (2^(r + 1) |A|_1), an expansivity constant when KS = S."""
    elements = list(elements)
    if not elements or not left_cover_check(presentation.semigroup, elements):
        raise PreconditionViolatedException(f"{elements} does not satisfy KS = S")

    norm = int(presentation.matrix.norm_l1())
    if norm == 0:
        raise PreconditionViolatedException("The presentation matrix is zero.")

    return Fraction(1, 2 ** (prefix_rank(elements) + 1) * norm)


def theorem_a_counterexample(
    semigroup: FiniteSemigroup,
) -> Optional[Tuple[ModulePresentation, TorusPoint, TorusPoint]]:
    """Returns J = 2Z[S] with a pair of points which is never separated, when SS != S.

    J is presented as the submodule generated by the 2 delta_t, as 2Z[S] is not of the
    form A Z[S]^k when SS != S.

    The pair is x = 0 and y = 1/2 at some s_K outside SS. Every shift of y reads
    coordinates in SS only, so it vanishes, while the annihilator of 2Z[S] is trivial.
    """
    outside = sorted(set(semigroup.elements) - product_set(semigroup))
    if not outside:
        return None

    matrix = AlgMat.from_rows(
        [[AlgElem.delta(semigroup, t, coefficient=2) for t in semigroup.elements]]
    )
    presentation = ModulePresentation(semigroup, matrix, generated=True)

    coords = [Fraction(0)] * semigroup.size
    coords[outside[0]] = Fraction(1, 2)

    return (
        presentation,
        TorusPoint.zero(1, semigroup.size),
        TorusPoint(tuple(coords), semigroup.size),
    )


def decide_expansive(
    presentation: ModulePresentation,
    budget: int = ENUMERATION_BUDGET,
) -> model.report.Expansivity:
    """Decides whether S acts expansively on X_J.

    A positive free rank yields a torus arc inside X_J. Otherwise, when SS = S the
    action is expansive by the rank criterion, and the optimal constant is brute
    forced as a cross-check when X_J is small enough. When SS != S only brute force
    over X_J can decide.
    """
    semigroup = presentation.semigroup
    structure = dual_group_structure(presentation)
    cover = minimal_left_cover(semigroup)
    norm = int(presentation.matrix.norm_l1())

    fields = dict(
        annihilator_trivial=structure.free_rank == 0,
        invariant_factors=list(structure.invariant_factors),
        free_rank=structure.free_rank,
        points=structure.order,
        matrix_norm=norm,
    )

    bound = None
    if cover is not None:
        fields.update(
            cover=cover.elements,
            cover_minimal=cover.minimal,
            prefix_rank=prefix_rank(cover.elements),
        )
        if norm:
            bound = theoretical_constant(presentation, cover.elements)
            fields["theoretical_bound"] = helper.encode_rational(bound)

    if structure.free_rank:
        functional = annihilator(presentation)[0]
        logger.debug(f"Free rank {structure.free_rank}, torus arc along {functional}")
        return model.report.Expansivity(
            decision="NonExpansive",
            route="TorusArc",
            witness=model.report.Witness(
                kind="annihilator",
                functional=[helper.encode_rational(c) for c in functional],
            ),
            **fields,
        )

    points, reason = enumerate_dual(presentation, budget, structure)

    if cover is not None:
        optimal = None
        if points is not None:
            optimal, _ = optimal_constant(presentation, points)
            if optimal is not None and optimal == 0:
                raise ConsistencyException(
                    "Rank criterion contradicted by brute force."
                )
            if optimal is not None and bound is not None and optimal < bound:
                raise ConsistencyException(f"Optimal constant {optimal} below {bound}.")

        return model.report.Expansivity(
            decision="Expansive",
            route="RankTheoremA",
            optimal_constant=helper.encode_optional(optimal),
            **fields,
        )

    if points is None:
        logger.warning(f"Unable to decide expansivity, X_J is {reason}")
        return model.report.Expansivity(
            decision="Unknown",
            route="BruteForce",
            reason=f"SS != S and X_J is {reason}",
            **fields,
        )

    optimal, point = optimal_constant(presentation, points)
    if optimal is not None and optimal == 0:
        return model.report.Expansivity(
            decision="NonExpansive",
            route="BruteForce",
            optimal_constant=helper.encode_rational(optimal),
            witness=model.report.Witness(
                kind="pair",
                x=TorusPoint.zero(point.n, point.width).to_document(),
                y=point.to_document(),
            ),
            **fields,
        )

    return model.report.Expansivity(
        decision="Expansive",
        route="BruteForce",
        optimal_constant=helper.encode_optional(optimal),
        **fields,
    )
