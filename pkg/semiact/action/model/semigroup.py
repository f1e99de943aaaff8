"""Defines types to assist with loading semigroup documents.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator
from semiact.action.exceptions import ValidationException


class Document(BaseModel, extra="forbid"):
    """Defines the schema of a semigroup, either as a table or as a named family."""

    size: Optional[int] = Field(
        None,
        title="The number of elements of the semigroup.",
    )
    table: Optional[List[List[int]]] = Field(
        None,
        title="The multiplication table, row s and column t give the index of st.",
    )
    labels: Optional[List[str]] = Field(
        None,
        title="Optional human readable names of the elements, in table order.",
    )
    family: Optional[str] = Field(
        None,
        title="The name of a semigroup family to construct instead of a table.",
    )
    params: Optional[Dict[str, Any]] = Field(
        None,
        title="The parameters of the requested family.",
    )

    @model_validator(mode="after")
    def exclusive_table_or_family(self):
        """Ensure that either a table or a family is provided, not both."""
        if self.table is not None and self.family is not None:
            raise ValidationException(
                "Either table OR family must be specified, not both."
            )

        if self.table is None and self.family is None:
            raise ValidationException("One of table or family must be set.")

        if self.table is not None and self.size is None:
            raise ValidationException("A table must be accompanied by its size.")

        return self
