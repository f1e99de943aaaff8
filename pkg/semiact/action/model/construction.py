"""Defines types to assist with loading semigroup constructions.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import List, Optional

from pydantic import BaseModel, Field, model_validator
from semiact.action.exceptions import ValidationException
from semiact.action.model import semigroup


class Rees(BaseModel, extra="forbid", populate_by_name=True):
    """Defines the schema of a Rees matrix semigroup M0(G; I, Lambda; P)."""

    group: semigroup.Document = Field(
        title="The finite group G.",
    )
    I: int = Field(  # noqa: E741
        title="The size of the index set I.",
    )
    Lambda: int = Field(
        title="The size of the index set Lambda.",
    )
    P: List[List[Optional[int]]] = Field(
        title="The Lambda x I sandwich matrix, null entries denote the adjoined zero.",
    )

    @model_validator(mode="after")
    def sandwich_dimensions(self):
        """Ensure the sandwich matrix is Lambda x I."""
        if self.I < 1 or self.Lambda < 1:
            raise ValidationException("Index sets must be non-empty.")

        if len(self.P) != self.Lambda or any(len(row) != self.I for row in self.P):
            raise ValidationException(
                f"Sandwich matrix must be {self.Lambda}x{self.I} (Lambda x I)."
            )

        return self


class Union(BaseModel, extra="forbid"):
    """Defines the schema of a disjoint union with an adjoined zero."""

    components: List[semigroup.Document] = Field(
        title="The component semigroups, at least two.",
    )

    @model_validator(mode="after")
    def at_least_two(self):
        """Ensure there are at least two components."""
        if len(self.components) < 2:
            raise ValidationException("A disjoint union needs at least two components.")

        return self
