"""Implements named families of finite semigroups.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import Any, Callable, Dict, Mapping

import pydantic
from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.exceptions import UnknownFamilyException, ValidationException
from semiact.action.semigroup import table
from semiact.action.semigroup.table import FiniteSemigroup


def _order(params: Mapping[str, Any]) -> int:
    try:
        m = int(params["m"])
    except (KeyError, TypeError, ValueError):
        raise ValidationException("Family parameter 'm' must be an integer.")

    if m < 1:
        raise ValidationException(f"Family parameter 'm' must be positive, not {m}.")

    return m


def _component(value: Any) -> FiniteSemigroup:
    if isinstance(value, model.semigroup.Document):
        return from_document(value)
    if not isinstance(value, dict):
        raise ValidationException("direct_product components must be semigroups.")

    try:
        document = model.semigroup.Document.model_validate(value)
    except pydantic.ValidationError as err:
        raise ValidationException(f"Invalid direct_product component: {err}")

    return from_document(document)


def cyclic_group(m: int) -> FiniteSemigroup:
    """Returns Z/m, where cyclic_group(1) is the trivial group."""
    return table.validate_table(
        m,
        [[(i + j) % m for j in range(m)] for i in range(m)],
        [str(i) for i in range(m)],
    )


def left_zero(m: int) -> FiniteSemigroup:
    """Returns the left-zero semigroup, st = s."""
    return table.validate_table(
        m, [[i] * m for i in range(m)], [f"l{i}" for i in range(m)]
    )


def right_zero(m: int) -> FiniteSemigroup:
    """Returns the right-zero semigroup, st = t."""
    return table.validate_table(
        m, [list(range(m)) for _ in range(m)], [f"r{i}" for i in range(m)]
    )


def null_with_zero(m: int) -> FiniteSemigroup:
    """Returns the null semigroup of order m, whose products all equal z = 0."""
    return table.validate_table(
        m, [[0] * m for _ in range(m)], ["z"] + [f"a{i}" for i in range(1, m)]
    )


def trunc_min(m: int) -> FiniteSemigroup:
    """Returns {1, ..., m} under min, a monoid with identity m at index m - 1."""
    return table.validate_table(
        m,
        [[min(i, j) for j in range(m)] for i in range(m)],
        [str(i + 1) for i in range(m)],
    )


def direct_product(left: FiniteSemigroup, right: FiniteSemigroup) -> FiniteSemigroup:
    """Returns S x T, where (s, t) has index s |T| + t."""
    width = right.size
    elements = [(s, t) for s in left.elements for t in right.elements]

    return table.validate_table(
        len(elements),
        [
            [
                left.multiply(s, u) * width + right.multiply(t, v)
                for (u, v) in elements
            ]
            for (s, t) in elements
        ],
        [f"({left.label(s)},{right.label(t)})" for (s, t) in elements],
    )


FAMILIES: Dict[str, Callable[[int], FiniteSemigroup]] = {
    "cyclic_group": cyclic_group,
    "left_zero": left_zero,
    "right_zero": right_zero,
    "null_with_zero": null_with_zero,
    "trunc_min": trunc_min,
    "chain_semilattice": trunc_min,
}


def family(name: str, params: Mapping[str, Any]) -> FiniteSemigroup:
    """Builds a semigroup from a named family."""
    if name == "direct_product":
        try:
            left, right = params["left"], params["right"]
        except KeyError:
            raise ValidationException("direct_product requires 'left' and 'right'.")

        return direct_product(_component(left), _component(right))

    try:
        builder = FAMILIES[name]
    except KeyError:
        raise UnknownFamilyException(f"Unknown semigroup family '{name}'")

    return builder(_order(params))


def from_document(document: model.semigroup.Document) -> FiniteSemigroup:
    """Builds a semigroup from either a table or a family document."""
    if document.family is not None:
        return family(document.family, document.params or {})

    return table.from_document(document)


def family_report(name: str, params: Mapping[str, Any]) -> model.report.Family:
    """Builds a named family and reports its structure."""
    semigroup = family(name, params)
    left_identity = linear.solve_left_identity(semigroup)

    return model.report.Family(
        name=name,
        semigroup=semigroup.to_document(),
        flags=table.classify(semigroup),
        left_identity=(
            left_identity.to_document() if left_identity is not None else None
        ),
    )
