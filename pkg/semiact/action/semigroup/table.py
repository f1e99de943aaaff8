"""Implements finite semigroups given by multiplication tables.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from semiact.action import model
from semiact.action.exceptions import (
    NotAssociativeException,
    OutOfRangeException,
    ValidationException,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup with a frozen element enumeration 0..m-1.

    Instances should be created through `validate_table`, which checks the axioms.
    """

    table: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def multiply(self, s: int, t: int) -> int:
        """Returns the index of st."""
        return self.table[s][t]

    def label(self, s: int) -> str:
        if self.labels:
            return self.labels[s]

        return str(s)

    def left_translate(self, elements: Iterable[int]) -> FrozenSet[int]:
        """Returns KS for the given K."""
        return frozenset(self.table[k][s] for k in elements for s in self.elements)

    def to_document(self) -> model.semigroup.Document:
        """Returns the semigroup as a table document."""
        return model.semigroup.Document(
            size=self.size,
            table=[list(row) for row in self.table],
            labels=list(self.labels) if self.labels else None,
        )


def validate_table(
    size: int,
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> FiniteSemigroup:
    """Validates a multiplication table, returning a finite semigroup.

    Associativity is checked exhaustively, and the first failing triple (a, b, c) in
    lexicographic order is reported.
    """
    if size < 1:
        raise ValidationException("A semigroup must have at least one element.")

    if len(table) != size or any(len(row) != size for row in table):
        raise ValidationException(f"Table is not {size}x{size}.")

    if labels is not None and len(labels) != size:
        raise ValidationException(f"Expected {size} labels, got {len(labels)}.")

    for s, row in enumerate(table):
        for t, entry in enumerate(row):
            if not isinstance(entry, int) or entry < 0 or entry >= size:
                raise OutOfRangeException(
                    f"Table entry ({s}, {t}) = {entry} is out of range [0, {size})."
                )

    for a, b, c in product(range(size), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociativeException(a, b, c)

    logger.debug(f"Validated semigroup table of size {size}")
    return FiniteSemigroup(
        table=tuple(tuple(row) for row in table),
        labels=tuple(labels) if labels else None,
    )


def from_document(document: model.semigroup.Document) -> FiniteSemigroup:
    """Returns a validated semigroup from a table document.

    Family documents are built by `semiact.action.construction.family.from_document`.
    """
    if document.table is None:
        raise ValidationException("Document does not contain a table.")

    return validate_table(document.size, document.table, document.labels)


def product_set(semigroup: FiniteSemigroup) -> FrozenSet[int]:
    """Returns SS."""
    return semigroup.left_translate(semigroup.elements)


def is_expansive(semigroup: FiniteSemigroup) -> bool:
    """Returns whether a finite semigroup admits a finite K with KS = S."""
    return len(product_set(semigroup)) == semigroup.size


def idempotents(semigroup: FiniteSemigroup) -> Tuple[int, ...]:
    return tuple(e for e in semigroup.elements if semigroup.multiply(e, e) == e)


def left_identity_elements(semigroup: FiniteSemigroup) -> Tuple[int, ...]:
    """Returns every e with es = s for all s."""
    return tuple(
        e
        for e in semigroup.elements
        if all(semigroup.multiply(e, s) == s for s in semigroup.elements)
    )


def identity_element(semigroup: FiniteSemigroup) -> Optional[int]:
    """Returns the two-sided identity element, if there is one."""
    for e in left_identity_elements(semigroup):
        if all(semigroup.multiply(s, e) == s for s in semigroup.elements):
            return e

    return None


def regular_inverse(semigroup: FiniteSemigroup, s: int) -> Optional[int]:
    """Returns the least s* with s s* s = s and s* s s* = s*, if any."""
    mul = semigroup.multiply
    for candidate in semigroup.elements:
        if mul(mul(s, candidate), s) == s and mul(mul(candidate, s), candidate) == (
            candidate
        ):
            return candidate

    return None


def classify(semigroup: FiniteSemigroup) -> model.report.Flags:
    """Computes the structural predicates of a semigroup by exhaustive checks."""
    mul = semigroup.multiply
    elements = semigroup.elements

    # Cancellativity is injectivity of every left and right translation.
    left_cancellative = all(
        len({mul(s, t) for t in elements}) == semigroup.size for s in elements
    )
    right_cancellative = all(
        len({mul(t, s) for t in elements}) == semigroup.size for s in elements
    )

    idempotent = idempotents(semigroup)
    regular = all(regular_inverse(semigroup, s) is not None for s in elements)
    commuting = all(mul(e, f) == mul(f, e) for e in idempotent for f in idempotent)
    left_identities = left_identity_elements(semigroup)
    identity = identity_element(semigroup)

    return model.report.Flags(
        is_monoid=identity is not None,
        has_left_identity_element=len(left_identities) > 0,
        is_cancellative=left_cancellative and right_cancellative,
        is_left_cancellative=left_cancellative,
        is_right_cancellative=right_cancellative,
        is_regular=regular,
        is_inverse=regular and commuting,
        is_expansive=is_expansive(semigroup),
        idempotents=list(idempotent),
        identity=identity,
        left_identity_elements=list(left_identities),
    )


def is_group(semigroup: FiniteSemigroup) -> bool:
    """Returns whether a finite semigroup is a group."""
    identity = identity_element(semigroup)
    if identity is None:
        return False

    return all(
        any(semigroup.multiply(s, t) == identity for t in semigroup.elements)
        for s in semigroup.elements
    )


def group_inverse(semigroup: FiniteSemigroup, g: int) -> int:
    """Returns the inverse of g in a finite group."""
    identity = identity_element(semigroup)
    for h in semigroup.elements:
        if semigroup.multiply(g, h) == identity:
            return h

    raise ValidationException(f"Element {g} has no inverse.")
