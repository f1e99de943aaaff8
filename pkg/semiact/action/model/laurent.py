"""Defines types to assist with loading elements of Z[Z].

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import List

from pydantic import BaseModel, Field


class Document(BaseModel, extra="forbid"):
    """Defines the schema of a finitely supported integer Laurent element."""

    lo: int = Field(
        0,
        title="The exponent of the first coefficient.",
    )
    coeffs: List[int] = Field(
        title="The coefficients a(lo), a(lo + 1), ...",
    )
