"""Semigroup constructions: named families, Rees matrix semigroups, disjoint unions,
and identities of inverse semigroups.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.construction import family  # noqa: F401
from semiact.action.construction import inverse  # noqa: F401
from semiact.action.construction import rees  # noqa: F401
from semiact.action.construction import union  # noqa: F401
