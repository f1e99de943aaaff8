"""Re-verification of the certificates embedded in reports.

SPDX-License-Identifier: BSD-3-Clause
"""

from semiact.action.verify import certificate  # noqa: F401
