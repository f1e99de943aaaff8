"""Convolution algebras of finite semigroups, and matrices over them.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.algebra import element  # noqa: F401
from semiact.action.algebra import linear  # noqa: F401
from semiact.action.algebra import matrix  # noqa: F401
from semiact.action.algebra import neumann  # noqa: F401
from semiact.action.algebra import ring  # noqa: F401
