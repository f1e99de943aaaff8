"""Defines semiact entrypoints.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.entrypoint import cli  # noqa: F401
