"""The shift action on X_J, its metric, and expansivity decisions.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.dynamics import expansivity  # noqa: F401
from semiact.action.dynamics import metric  # noqa: F401
