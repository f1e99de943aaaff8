"""Module presentations J = A Z[S]^k and their dual groups X_J.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.duality import module  # noqa: F401
from semiact.action.duality import structure  # noqa: F401
from semiact.action.duality import torus  # noqa: F401
