"""semiact - Expansivity of algebraic actions of finite semigroups.

SPDX-License-Identifier: BSD-3-Clause
"""
