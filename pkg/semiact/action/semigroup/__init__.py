"""Finite semigroups, their structure, and left covers.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.semigroup import table  # noqa: F401
from semiact.action.semigroup import cover  # noqa: F401
from semiact.action.semigroup import analysis  # noqa: F401
