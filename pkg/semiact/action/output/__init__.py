"""Defines outputs supported by semiact.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.output import document  # noqa: F401
from semiact.action.output import pretty  # noqa: F401
