"""Right invertible witnesses for finite semigroups, and invertibility in l1(Z).

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.invertibility import laurent  # noqa: F401
from semiact.action.invertibility import witness  # noqa: F401
