"""Implements the identity e 1_E of the convolution algebra of an inverse semigroup.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.algebra import linear
from semiact.action.algebra.element import AlgElem
from semiact.action.exceptions import IdentitySolveFailedException, NotInverseException
from semiact.action.semigroup import table
from semiact.action.semigroup.table import FiniteSemigroup


def inverse_semigroup_identity(semigroup: FiniteSemigroup) -> AlgElem:
    """Returns the identity of Q[S] for a finite inverse semigroup S.

    The idempotents E commute and so form a subsemigroup; the identity of Q[E],
    extended by zero, is the identity of Q[S].
    """
    flags = table.classify(semigroup)
    if not flags.is_inverse:
        raise NotInverseException("The semigroup is not an inverse semigroup.")

    idempotents = flags.idempotents
    position = {e: index for index, e in enumerate(idempotents)}
    subsemigroup = table.validate_table(
        len(idempotents),
        [
            [position[semigroup.multiply(e, f)] for f in idempotents]
            for e in idempotents
        ],
    )

    restricted = linear.solve_left_identity(subsemigroup, two_sided=True)
    if restricted is None:
        raise IdentitySolveFailedException("Q[E] has no identity.")

    identity = AlgElem(
        semigroup,
        restricted.ring,
        {idempotents[s]: c for s, c in restricted.coeffs.items()},
    )
    if not linear.is_two_sided_identity(identity):
        raise IdentitySolveFailedException(f"{identity} is not an identity of Q[S].")

    return identity
