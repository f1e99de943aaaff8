"""Analyses a single finite semigroup.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging

from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.constants import COVER_BUDGET
from semiact.action.semigroup.cover import (
    minimal_left_cover,
    reduce_to_idempotents,
    regular_idempotent_cover,
)
from semiact.action.semigroup.table import FiniteSemigroup, classify

logger = logging.getLogger(__name__)


def analyze(
    semigroup: FiniteSemigroup,
    budget: int = COVER_BUDGET,
) -> model.report.Analysis:
    """Reports the structure flags, covers and convolution identities of S."""
    flags = classify(semigroup)
    cover = minimal_left_cover(semigroup, budget=budget)

    idempotent_cover = None
    if cover is not None:
        idempotent_cover = reduce_to_idempotents(semigroup, cover.elements)

    left_identity = linear.solve_left_identity(semigroup)
    identity = linear.solve_left_identity(semigroup, two_sided=True)
    logger.debug(
        f"Analysed semigroup of order {semigroup.size}, cover {cover}, "
        f"left identity {left_identity}"
    )

    return model.report.Analysis(
        semigroup=semigroup.to_document(),
        flags=flags,
        cover=cover,
        idempotent_cover=idempotent_cover,
        regular_cover=regular_idempotent_cover(semigroup),
        left_identity=(
            left_identity.to_document() if left_identity is not None else None
        ),
        identity=identity.to_document() if identity is not None else None,
        cancellative_consistent=linear.cancellative_consistency(semigroup),
    )
