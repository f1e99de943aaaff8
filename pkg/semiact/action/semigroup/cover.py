"""Implements finite left covers K with KS = S, and their reduction to idempotents.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from itertools import combinations
from typing import Iterable, List, Optional

from semiact.action import model
from semiact.action.constants import COVER_BUDGET
from semiact.action.exceptions import PreconditionViolatedException
from semiact.action.semigroup.table import (
    FiniteSemigroup,
    classify,
    is_expansive,
    product_set,
)

logger = logging.getLogger(__name__)


def left_cover_check(semigroup: FiniteSemigroup, elements: Iterable[int]) -> bool:
    """Checks whether KS = S."""
    return len(semigroup.left_translate(elements)) == semigroup.size


def greedy_cover(semigroup: FiniteSemigroup) -> List[int]:
    """Returns a cover picked greedily by the number of newly covered elements.

    Ties are broken by the smallest element index. The caller must ensure SS = S.
    """
    uncovered = set(semigroup.elements)
    chosen: List[int] = []

    while uncovered:
        best = max(
            semigroup.elements,
            key=lambda t: (
                len(uncovered & semigroup.left_translate([t])),
                -t,
            ),
        )
        gained = uncovered & semigroup.left_translate([best])
        if not gained:
            break

        chosen.append(best)
        uncovered -= gained

    return sorted(chosen)


def minimal_left_cover(
    semigroup: FiniteSemigroup,
    budget: int = COVER_BUDGET,
) -> Optional[model.report.Cover]:
    """Returns a minimum-cardinality K with KS = S, or None if SS != S.

    A greedy cover is found first, and then smaller subsets are searched exhaustively.
    If more than `budget` candidates would be required, the greedy cover is returned and
    flagged as non-minimal.
    """
    if not is_expansive(semigroup):
        logger.debug(f"SS != S, elements {sorted(product_set(semigroup))} only")
        return None

    greedy = greedy_cover(semigroup)
    tried = 0

    for size in range(1, len(greedy)):
        for candidate in combinations(semigroup.elements, size):
            tried += 1
            if tried > budget:
                logger.warning(
                    f"Cover search exceeded budget of {budget}, "
                    "cover may not be minimal"
                )
                return model.report.Cover(elements=greedy, minimal=False)

            if left_cover_check(semigroup, candidate):
                return model.report.Cover(elements=list(candidate), minimal=True)

    return model.report.Cover(elements=greedy, minimal=True)


def left_stabilizer(semigroup: FiniteSemigroup, s: int) -> Optional[int]:
    """Returns the least r with rs = s, if any."""
    for r in semigroup.elements:
        if semigroup.multiply(r, s) == s:
            return r

    return None


def reduce_to_idempotents(
    semigroup: FiniteSemigroup,
    elements: Iterable[int],
) -> Optional[List[int]]:
    """Reduces a cover K to a cover F by idempotents, if every s has a left stabilizer.

    First every t in K is replaced by a left stabilizer r of t, so that every s is fixed
    by some member of the new set. Then non-idempotent members t are removed while some
    other member t' satisfies t't = t.
    """
    elements = sorted(set(elements))
    if not left_cover_check(semigroup, elements):
        raise PreconditionViolatedException(f"{elements} does not satisfy KS = S")

    stabilizers = {s: left_stabilizer(semigroup, s) for s in semigroup.elements}
    missing = [s for s, r in stabilizers.items() if r is None]
    if missing:
        logger.debug(f"Elements {missing} have no left stabilizer")
        return None

    reduced = sorted({stabilizers[t] for t in elements})

    while True:
        for t in reduced:
            if semigroup.multiply(t, t) == t:
                continue

            witness = next(
                (w for w in reduced if w != t and semigroup.multiply(w, t) == t),
                None,
            )
            if witness is not None:
                reduced.remove(t)
                break
        else:
            break

    return reduced


def regular_idempotent_cover(semigroup: FiniteSemigroup) -> Optional[List[int]]:
    """Returns E_S as a cover of a regular semigroup, where s = (ss*)s."""
    flags = classify(semigroup)
    if not flags.is_regular:
        return None

    return list(flags.idempotents)
