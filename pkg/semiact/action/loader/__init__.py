"""Loaders for semiact input documents.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.loader import document  # noqa: F401
