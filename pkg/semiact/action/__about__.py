"""semiact - Expansivity of algebraic actions of finite semigroups.

SPDX-License-Identifier: BSD-3-Clause
"""

__title__ = "semiact"
__summary__ = "Expansivity of algebraic actions of finite semigroups."
__version__ = "0.1.0"
__author__ = "semiact contributors"
__uri__ = "https://www.github.com/semiact/semiact/"
__license__ = "BSD-3-Clause"
