"""Defines types to assist with loading module presentations and torus points.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import List

from pydantic import BaseModel, Field
from semiact.action.model import algebra
from semiact.action.model.semigroup import Document as SemigroupDocument


class Document(BaseModel, extra="forbid"):
    """Defines the schema of a presentation J = A Z[S]^k."""

    semigroup: SemigroupDocument = Field(
        title="The semigroup S.",
    )
    matrix: algebra.Matrix = Field(
        title="The n x k generator matrix A over Z[S].",
    )
    generated: bool = Field(
        False,
        title=(
            "Whether J is the submodule generated by the columns of A, containing them."
        ),
    )


class TorusPoint(BaseModel, extra="forbid"):
    """Defines the schema of an exact rational point of (T^S)^n."""

    coords: List[List[int]] = Field(
        title="Coordinates as [num, den] pairs, coordinate major, element minor.",
    )
