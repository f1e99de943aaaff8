"""Defines models used by semiact.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.model import algebra  # noqa: F401
from semiact.action.model import construction  # noqa: F401
from semiact.action.model import laurent  # noqa: F401
from semiact.action.model import presentation  # noqa: F401
from semiact.action.model import report  # noqa: F401
from semiact.action.model import semigroup  # noqa: F401
