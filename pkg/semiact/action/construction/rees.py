"""Implements Rees matrix semigroups M0(G; I, Lambda; P) and their criteria.

Element 0 is the adjoined zero z, and (i, g, lambda) has index
1 + (i |G| + g) |Lambda| + lambda.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from semiact.action import model
from semiact.action.algebra import linear
from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring, to_fraction
from semiact.action.constants import ZERO_LABEL
from semiact.action.construction import family
from semiact.action.exceptions import (
    ConsistencyException,
    InvalidGroupException,
    ValidationException,
)
from semiact.action.semigroup import table
from semiact.action.semigroup.cover import left_cover_check
from semiact.action.semigroup.table import FiniteSemigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReesSpec:
    """A group G, index set sizes |I| and |Lambda|, and a Lambda x I sandwich matrix.

    None entries of the sandwich matrix denote the adjoined zero of G.
    """

    group: FiniteSemigroup
    index_i: int
    index_lambda: int
    sandwich: Tuple[Tuple[Optional[int], ...], ...]

    def __post_init__(self):
        if not table.is_group(self.group):
            raise InvalidGroupException("The Rees construction requires a group.")
        if self.index_i < 1 or self.index_lambda < 1:
            raise ValidationException("Index sets must be non-empty.")
        if len(self.sandwich) != self.index_lambda or any(
            len(row) != self.index_i for row in self.sandwich
        ):
            raise ValidationException(
                f"Sandwich matrix must be {self.index_lambda}x{self.index_i}."
            )
        for row in self.sandwich:
            for entry in row:
                if entry is not None and not 0 <= entry < self.group.size:
                    raise InvalidGroupException(f"{entry} is not an element of G.")

    @property
    def size(self) -> int:
        return self.index_i * self.group.size * self.index_lambda + 1

    def index(self, i: int, g: int, lam: int) -> int:
        return 1 + (i * self.group.size + g) * self.index_lambda + lam

    def triple(self, index: int) -> Tuple[int, int, int]:
        """Inverts `index` for non-zero elements."""
        rest, lam = divmod(index - 1, self.index_lambda)
        i, g = divmod(rest, self.group.size)
        return i, g, lam

    def entry(self, lam: int, i: int) -> Optional[int]:
        return self.sandwich[lam][i]

    def column_nonzero(self, i: int) -> Optional[int]:
        """Returns the first lambda with p(lambda, i) in G, if any."""
        return next(
            (lam for lam in range(self.index_lambda) if self.entry(lam, i) is not None),
            None,
        )

    def to_document(self) -> model.construction.Rees:
        return model.construction.Rees(
            group=self.group.to_document(),
            I=self.index_i,
            Lambda=self.index_lambda,
            P=[list(row) for row in self.sandwich],
        )


def from_document(document: model.construction.Rees) -> ReesSpec:
    return ReesSpec(
        group=family.from_document(document.group),
        index_i=document.I,
        index_lambda=document.Lambda,
        sandwich=tuple(tuple(row) for row in document.P),
    )


def rees_build(spec: ReesSpec) -> FiniteSemigroup:
    """Builds the multiplication table (i, g, l)(j, h, m) = (i, g p(l, j) h, m)."""
    group = spec.group
    grid = [[0] * spec.size for _ in range(spec.size)]
    labels = [ZERO_LABEL] + [""] * (spec.size - 1)

    for left in range(1, spec.size):
        i, g, lam = spec.triple(left)
        labels[left] = f"({i},{group.label(g)},{lam})"
        for right in range(1, spec.size):
            j, h, mu = spec.triple(right)
            p = spec.entry(lam, j)
            if p is not None:
                grid[left][right] = spec.index(
                    i, group.multiply(group.multiply(g, p), h), mu
                )

    return table.validate_table(spec.size, grid, labels)


def sandwich_matrix(spec: ReesSpec) -> AlgMat:
    """Returns P as a Lambda x I matrix over Q[G]."""
    zero = AlgElem.zero(spec.group, Ring.RAT)
    return AlgMat.from_rows(
        [
            [
                zero if p is None else AlgElem.delta(spec.group, p, Ring.RAT)
                for p in row
            ]
            for row in spec.sandwich
        ]
    )


def rees_image(spec: ReesSpec, a: AlgElem) -> AlgMat:
    """Maps a in Q[S] to the I x Lambda matrix over Q[G], dropping the z coefficient."""
    entries = [
        [dict() for _ in range(spec.index_lambda)] for _ in range(spec.index_i)
    ]
    for index, c in a.coeffs.items():
        if index == 0:
            continue
        i, g, lam = spec.triple(index)
        entries[i][lam][g] = c

    return AlgMat.from_rows(
        [[AlgElem(spec.group, a.ring, entry) for entry in row] for row in entries]
    )


def rees_cover(spec: ReesSpec) -> Tuple[Optional[List[int]], Optional[List[int]]]:
    """Returns the explicit left cover and idempotent cover, when they exist.

    With p(l0, i0) in G, K = {(i, 1, l0)} covers S. When every column i has some
    p(l(i), i) in G, the idempotents (i, p(l(i), i)^-1, l(i)) cover S.
    """
    group = spec.group
    unit = table.identity_element(group)
    semigroup = rees_build(spec)

    cover = None
    for lam in range(spec.index_lambda):
        if any(p is not None for p in spec.sandwich[lam]):
            cover = [spec.index(i, unit, lam) for i in range(spec.index_i)]
            break

    idempotents = None
    if all(spec.column_nonzero(i) is not None for i in range(spec.index_i)):
        idempotents = []
        for i in range(spec.index_i):
            lam = spec.column_nonzero(i)
            inverse = table.group_inverse(group, spec.entry(lam, i))
            idempotents.append(spec.index(i, inverse, lam))

    for candidate in (cover, idempotents):
        if candidate is not None and not left_cover_check(semigroup, candidate):
            raise ConsistencyException(f"Explicit cover {candidate} fails KS = S.")

    return cover, idempotents


def rees_idempotents(spec: ReesSpec) -> List[int]:
    """Returns z and every (i, g, l) with p(l, i) in G and g = p(l, i)^-1."""
    found = [0]
    for i in range(spec.index_i):
        for lam in range(spec.index_lambda):
            p = spec.entry(lam, i)
            if p is not None:
                found.append(spec.index(i, table.group_inverse(spec.group, p), lam))

    return sorted(found)


def is_unital(spec: ReesSpec) -> bool:
    """Decides whether P is invertible over Q[G] by an exact determinant."""
    if spec.index_i != spec.index_lambda:
        return False

    block = algmatrix.left_multiplication_matrix(sandwich_matrix(spec))
    return bool(block.det())


def rees_report(spec: ReesSpec) -> model.report.Rees:
    """Reports the expansivity, idempotent cover and unitality criteria."""
    semigroup = rees_build(spec)
    cover, idempotents = rees_cover(spec)
    unital = is_unital(spec)

    identity = None
    integral = None
    if unital:
        identity = linear.solve_left_identity(semigroup, two_sided=True)
        if identity is None:
            raise ConsistencyException(
                "Invertible sandwich matrix without an identity."
            )
        integral = all(
            to_fraction(c).denominator == 1 for c in identity.coeffs.values()
        )

    return model.report.Rees(
        size=semigroup.size,
        semigroup=semigroup.to_document(),
        expansive=cover is not None,
        idempotent_cover=idempotents is not None,
        unital_l1=unital,
        cover=cover,
        idempotents=idempotents,
        identity=identity.to_document() if identity is not None else None,
        integral_identity=integral,
    )


def random_spec(
    rng: random.Random,
    group: FiniteSemigroup,
    max_index: int = 3,
    zero_probability: float = 0.4,
) -> ReesSpec:
    """Returns a Rees spec with random index sizes and sandwich entries."""
    index_i = rng.randint(1, max_index)
    index_lambda = rng.randint(1, max_index)
    sandwich = tuple(
        tuple(
            None if rng.random() < zero_probability else rng.randrange(group.size)
            for _ in range(index_i)
        )
        for _ in range(index_lambda)
    )

    return ReesSpec(group, index_i, index_lambda, sandwich)


def rees_sweep(
    seed: int,
    count: int,
    groups: Sequence[FiniteSemigroup],
    workers: int = 4,
) -> List[Tuple[ReesSpec, model.report.Rees]]:
    """Searches random specs for a unital convolution algebra whose identity is not
    integral, so that Z[S] is not unital while l1(S) is.
    """
    rng = random.Random(seed)
    specs = [random_spec(rng, rng.choice(groups)) for _ in range(count)]
    found = []

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(rees_report, spec): spec for spec in specs}
        for future in as_completed(futures):
            report = future.result()
            if report.unital_l1 and not report.integral_identity:
                found.append((futures[future], report))

    logger.info(f"Found {len(found)} of {count} specs with a non-integral identity")
    return sorted(found, key=lambda pair: specs.index(pair[0]))
