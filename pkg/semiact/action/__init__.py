"""semiact - Expansivity of algebraic actions of finite semigroups.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action import __about__  # noqa: F401
from semiact.action import constants  # noqa: F401
from semiact.action import helper  # noqa: F401
from semiact.action import model  # noqa: F401
from semiact.action import semigroup  # noqa: F401
from semiact.action import algebra  # noqa: F401
from semiact.action import duality  # noqa: F401
from semiact.action import dynamics  # noqa: F401
from semiact.action import invertibility  # noqa: F401
from semiact.action import construction  # noqa: F401
from semiact.action import loader  # noqa: F401
from semiact.action import verify  # noqa: F401
from semiact.action import output  # noqa: F401
