"""Implements disjoint unions of semigroups with an adjoined zero.

Element 0 is z, followed by the elements of each component in order.

SPDX-License-Identifier: BSD-3-Clause
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.ring import Ring
from semiact.action.constants import ZERO_LABEL
from semiact.action.construction import family
from semiact.action.exceptions import ConsistencyException, ValidationException
from semiact.action.semigroup import table
from semiact.action.semigroup.table import FiniteSemigroup


@dataclass(frozen=True)
class UnionSpec:
    components: Tuple[FiniteSemigroup, ...]

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValidationException("A disjoint union needs at least two components.")

    def offset(self, component: int) -> int:
        return 1 + sum(c.size for c in self.components[:component])

    @property
    def size(self) -> int:
        return self.offset(len(self.components))


def from_document(document: model.construction.Union) -> UnionSpec:
    return UnionSpec(tuple(family.from_document(c) for c in document.components))


def union_table(spec: UnionSpec) -> FiniteSemigroup:
    """Builds the table where st is the component product or z."""
    grid = [[0] * spec.size for _ in range(spec.size)]
    labels = [ZERO_LABEL]

    for number, component in enumerate(spec.components):
        base = spec.offset(number)
        for s in component.elements:
            labels.append(f"{component.label(s)}_{number + 1}")
            for t in component.elements:
                grid[base + s][base + t] = base + component.multiply(s, t)

    return table.validate_table(spec.size, grid, labels)


def union_build(spec: UnionSpec) -> Tuple[FiniteSemigroup, Optional[AlgElem]]:
    """Builds the union, with the left identity (1 - n) z + e_1 + ... + e_n of its
    convolution algebra when every component has a left identity e_i.
    """
    semigroup = union_table(spec)
    identities = component_identities(spec)
    if any(e is None for e in identities):
        return semigroup, None

    values = {0: Ring.RAT.coerce(1 - len(spec.components))}
    for number, e in enumerate(identities):
        base = spec.offset(number)
        for s, c in e.coeffs.items():
            values[base + s] = c

    identity = AlgElem(semigroup, Ring.RAT, values)
    if not linear.is_left_identity(identity):
        raise ConsistencyException(f"{identity} is not a left identity of the union.")

    return semigroup, identity


def component_identities(spec: UnionSpec) -> List[Optional[AlgElem]]:
    return [linear.solve_left_identity(c) for c in spec.components]


def union_report(spec: UnionSpec) -> model.report.Union:
    """Reports the union, which is expansive exactly when every component is."""
    semigroup, identity = union_build(spec)

    return model.report.Union(
        size=semigroup.size,
        semigroup=semigroup.to_document(),
        expansive=table.is_expansive(semigroup),
        left_identity=identity.to_document() if identity is not None else None,
        component_identities=[
            e.to_document() if e is not None else None
            for e in component_identities(spec)
        ],
    )
