"""Loads JSON documents from file into their models and domain objects.

SPDX-License-Identifier: BSD-3-Clause
"""

import json
import os
from typing import Any, Type, TypeVar

import pydantic
from semiact.action import model
from semiact.action.algebra import matrix as algmatrix
from semiact.action.construction import family
from semiact.action.duality.module import ModulePresentation
from semiact.action.exceptions import DocumentException

T = TypeVar("T", bound=pydantic.BaseModel)


def read(filename: str) -> Any:
    """Reads a JSON document, wrapping any failure in a DocumentException."""
    path = os.path.abspath(os.path.expanduser(filename))
    try:
        with open(path, "r") as fin:
            return json.load(fin)
    except (OSError, json.JSONDecodeError) as err:
        raise DocumentException(err)


def parse(data: Any, schema: Type[T]) -> T:
    """Validates a decoded document against a schema."""
    try:
        return schema.model_validate(data)
    except pydantic.ValidationError as err:
        raise DocumentException(err)


def from_file(filename: str, schema: Type[T]) -> T:
    """Loads a document of the given schema from file."""
    return parse(read(filename), schema)


def load(source: str, schema: Type[T]) -> T:
    """Loads a document from inline JSON, or from file otherwise."""
    if not source.lstrip().startswith("{"):
        return from_file(source, schema)

    try:
        data = json.loads(source)
    except json.JSONDecodeError as err:
        raise DocumentException(err)

    return parse(data, schema)


def to_presentation(document: model.presentation.Document) -> ModulePresentation:
    """Builds a module presentation, resolving named semigroup families."""
    semigroup = family.from_document(document.semigroup)
    return ModulePresentation(
        semigroup,
        algmatrix.from_document(document.matrix, semigroup),
        generated=document.generated,
    )
