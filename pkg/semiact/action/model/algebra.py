"""Defines types to assist with loading convolution algebra elements and matrices.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import Dict, List, Literal

from pydantic import BaseModel, Field, model_validator
from semiact.action.exceptions import ValidationException


class Element(BaseModel, extra="forbid"):
    """Defines the schema of a finitely supported element of R[S]."""

    ring: Literal["Int", "Rat", "GaussRat"] = Field(
        "Int",
        title="The coefficient ring of the element.",
    )
    coeffs: Dict[str, List[int]] = Field(
        {},
        title=(
            "Map from element index to [num, den] (or [re_num, re_den, im_num, im_den] "
            "for GaussRat coefficients)."
        ),
    )

    @model_validator(mode="after")
    def coefficient_arity(self):
        """Ensure that every coefficient has the arity required by its ring."""
        arity = 4 if self.ring == "GaussRat" else 2

        for index, value in self.coeffs.items():
            if not index.lstrip("-").isdigit():
                raise ValidationException(f"Invalid element index '{index}'.")
            if len(value) != arity:
                raise ValidationException(
                    f"Coefficient of element {index} must have {arity} entries."
                )

        return self


class Matrix(BaseModel, extra="forbid"):
    """Defines the schema of a matrix over R[S]."""

    rows: int = Field(
        title="The number of rows.",
    )
    cols: int = Field(
        title="The number of columns.",
    )
    entries: List[List[Element]] = Field(
        title="The entries of the matrix, row by row.",
    )

    @model_validator(mode="after")
    def consistent_dimensions(self):
        """Ensure the entries agree with the declared dimensions."""
        if self.rows < 1 or self.cols < 1:
            raise ValidationException("A matrix must have at least one row and column.")

        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ValidationException(
                f"Entries do not describe a {self.rows}x{self.cols} matrix."
            )

        return self
