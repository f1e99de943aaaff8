"""Defines types for the reports emitted by semiact.

All exact rationals are encoded as [numerator, denominator] pairs.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field
from semiact.action.model import algebra, construction, presentation
from semiact.action.model.semigroup import Document as SemigroupDocument


class Flags(BaseModel, extra="forbid"):
    """Defines the structural predicates of a finite semigroup."""

    is_monoid: bool = Field(
        title="Whether the semigroup has a two-sided identity element.",
    )
    has_left_identity_element: bool = Field(
        title="Whether some element e satisfies es = s for every s.",
    )
    is_cancellative: bool = Field(
        title="Whether the semigroup is both left and right cancellative.",
    )
    is_left_cancellative: bool = Field(
        title="Whether st = sr implies t = r.",
    )
    is_right_cancellative: bool = Field(
        title="Whether sr = tr implies s = t.",
    )
    is_regular: bool = Field(
        title="Whether every element has an inverse in the sense of regularity.",
    )
    is_inverse: bool = Field(
        title="Whether the semigroup is regular and its idempotents commute.",
    )
    is_expansive: bool = Field(
        title="Whether SS = S.",
    )
    idempotents: List[int] = Field(
        title="The sorted idempotents of the semigroup.",
    )
    identity: Optional[int] = Field(
        None,
        title="The two-sided identity element, if any.",
    )
    left_identity_elements: List[int] = Field(
        [],
        title="All elements e with es = s for every s.",
    )


class Cover(BaseModel, extra="forbid"):
    """Defines a finite left cover K with KS = S."""

    elements: List[int] = Field(
        title="The sorted elements of the cover.",
    )
    minimal: bool = Field(
        title="Whether the cover was proven to be of minimum cardinality.",
    )


class Analysis(BaseModel, extra="forbid"):
    """Defines the result of analysing a single finite semigroup."""

    semigroup: SemigroupDocument = Field(
        title="The semigroup which was analysed, as a table.",
    )
    flags: Flags = Field(
        title="The structural predicates of the semigroup.",
    )
    cover: Optional[Cover] = Field(
        None,
        title="A left cover K with KS = S, absent when SS != S.",
    )
    idempotent_cover: Optional[List[int]] = Field(
        None,
        title="A cover by idempotents F with FS = S, when the reduction succeeds.",
    )
    regular_cover: Optional[List[int]] = Field(
        None,
        title="The idempotents of a regular semigroup, which always cover it.",
    )
    left_identity: Optional[algebra.Element] = Field(
        None,
        title="A left identity of the rational convolution algebra, if any.",
    )
    identity: Optional[algebra.Element] = Field(
        None,
        title="A two-sided identity of the rational convolution algebra, if any.",
    )
    cancellative_consistent: Optional[bool] = Field(
        None,
        title="For cancellative semigroups, whether the equivalent criteria agree.",
    )


class Witness(BaseModel, extra="forbid"):
    """Defines a certificate of non-expansivity."""

    kind: Literal["annihilator", "pair"] = Field(
        title="Whether the witness is an annihilator vector or a non-separated pair.",
    )
    functional: Optional[List[List[int]]] = Field(
        None,
        title="A non-zero rational vector f with f * A = 0, for torus arc witnesses.",
    )
    x: Optional[presentation.TorusPoint] = Field(
        None,
        title="The first point of a pair which is never separated.",
    )
    y: Optional[presentation.TorusPoint] = Field(
        None,
        title="The second point of a pair which is never separated.",
    )


class Expansivity(BaseModel, extra="forbid"):
    """Defines the expansivity decision for an algebraic action, with certificates."""

    decision: Literal["Expansive", "NonExpansive", "Unknown"] = Field(
        title="The decision.",
    )
    route: Literal["RankTheoremA", "BruteForce", "TorusArc"] = Field(
        title="How the decision was reached.",
    )
    reason: Optional[str] = Field(
        None,
        title="A human readable explanation, required for Unknown decisions.",
    )
    cover: Optional[List[int]] = Field(
        None,
        title="A left cover K with KS = S, if one exists.",
    )
    cover_minimal: Optional[bool] = Field(
        None,
        title="Whether the cover was proven to be of minimum cardinality.",
    )
    annihilator_trivial: bool = Field(
        title="Whether the annihilator of J is trivial.",
    )
    invariant_factors: List[int] = Field(
        [],
        title="The invariant factors greater than one of the quotient by J.",
    )
    free_rank: int = Field(
        0,
        title="The free rank of the quotient by J.",
    )
    points: Optional[int] = Field(
        None,
        title="The number of points of X_J, when finite.",
    )
    matrix_norm: int = Field(
        0,
        title="The sum of the l1 norms of the entries of A.",
    )
    prefix_rank: Optional[int] = Field(
        None,
        title="The length of the shortest enumeration prefix containing the cover.",
    )
    optimal_constant: Optional[List[int]] = Field(
        None,
        title="The optimal expansivity constant, when brute forced.",
    )
    theoretical_bound: Optional[List[int]] = Field(
        None,
        title="The expansivity constant guaranteed by the cover and the matrix norm.",
    )
    witness: Optional[Witness] = Field(
        None,
        title="A certificate of non-expansivity.",
    )


class TheoremB(BaseModel, extra="forbid"):
    """Defines a right invertible witness B in A Z[S]^k, or its absence."""

    present: bool = Field(
        title="Whether a witness was found.",
    )
    reason: Optional[str] = Field(
        None,
        title="Why a witness is absent.",
    )
    left_identity: Optional[algebra.Element] = Field(
        None,
        title="The left identity e used on the diagonal of I.",
    )
    scalar: Optional[int] = Field(
        None,
        title="The denominator clearing scalar m.",
    )
    X: Optional[algebra.Matrix] = Field(
        None,
        title="The rational solution of A * X = Re{I}.",
    )
    B: Optional[algebra.Matrix] = Field(
        None,
        title="The integral matrix B = A * (mX).",
    )
    C: Optional[algebra.Matrix] = Field(
        None,
        title="The right inverse of B, B * C = Re{I}.",
    )
    two_sided: bool = Field(
        False,
        title="Whether Re{I} is a two-sided identity, in which case C * B = Re{I}.",
    )


class Rees(BaseModel, extra="forbid"):
    """Defines the criteria report for a Rees matrix semigroup."""

    size: int = Field(
        title="The number of elements of the built semigroup.",
    )
    semigroup: SemigroupDocument = Field(
        title="The built semigroup, as a table.",
    )
    expansive: bool = Field(
        title="Whether some sandwich entry is non-zero.",
    )
    idempotent_cover: bool = Field(
        title="Whether every column of the sandwich matrix has a non-zero entry.",
    )
    unital_l1: bool = Field(
        title="Whether the convolution algebra is unital.",
    )
    cover: Optional[List[int]] = Field(
        None,
        title="The explicit left cover, when expansive.",
    )
    idempotents: Optional[List[int]] = Field(
        None,
        title="The explicit idempotent cover, when every column is non-zero.",
    )
    identity: Optional[algebra.Element] = Field(
        None,
        title="The identity of the rational convolution algebra, when unital.",
    )
    integral_identity: Optional[bool] = Field(
        None,
        title="Whether the identity has integral coefficients.",
    )


class Union(BaseModel, extra="forbid"):
    """Defines the report for a disjoint union with an adjoined zero."""

    size: int = Field(
        title="The number of elements of the built semigroup.",
    )
    semigroup: SemigroupDocument = Field(
        title="The built semigroup, as a table.",
    )
    expansive: bool = Field(
        title="Whether SS = S for the union.",
    )
    left_identity: Optional[algebra.Element] = Field(
        None,
        title=(
            "The left identity (1 - n) z + e_1 + ... + e_n, if each component has one."
        ),
    )
    component_identities: List[Optional[algebra.Element]] = Field(
        [],
        title="The left identities of each component, if any.",
    )


class LaurentInverse(BaseModel, extra="forbid"):
    """Defines a truncated l1 inverse of a Laurent element."""

    lo: int = Field(
        title="The exponent of the first coefficient.",
    )
    coeffs: List[float] = Field(
        title="The coefficients of the truncated inverse.",
    )
    terms: int = Field(
        title="The number of series terms taken per root.",
    )
    residual: float = Field(
        title="The measured l1 norm of a * b - delta_0.",
    )
    tail_bound: float = Field(
        title="The a-priori bound on the residual.",
    )


class Laurent(BaseModel, extra="forbid"):
    """Defines the invertibility report for an element of Z[Z]."""

    decision: Literal["Invertible", "NotInvertible", "Borderline"] = Field(
        title="The decision.",
    )
    certified: bool = Field(
        title="Whether the decision was certified with exact arithmetic.",
    )
    roots: List[List[float]] = Field(
        [],
        title="The roots of the symbol as [real, imaginary] pairs.",
    )
    moduli: List[float] = Field(
        [],
        title="The moduli of the roots.",
    )
    inverse: Optional[LaurentInverse] = Field(
        None,
        title="The truncated inverse, when invertible.",
    )


class Family(BaseModel, extra="forbid"):
    """Defines the report for a named semigroup family."""

    name: str = Field(
        title="The name of the family.",
    )
    semigroup: SemigroupDocument = Field(
        title="The built semigroup, as a table.",
    )
    flags: Flags = Field(
        title="The structural predicates of the semigroup.",
    )
    left_identity: Optional[algebra.Element] = Field(
        None,
        title="A left identity of the rational convolution algebra, if any.",
    )


class Check(BaseModel, extra="forbid"):
    """Defines a single certificate check."""

    name: str = Field(
        title="The name of the certificate which was checked.",
    )
    passed: bool = Field(
        title="Whether the certificate was valid.",
    )
    detail: Optional[str] = Field(
        None,
        title="Additional detail on a failure.",
    )


class Verification(BaseModel, extra="forbid"):
    """Defines the result of re-verifying every certificate in a report."""

    passed: bool = Field(
        title="Whether every check passed.",
    )
    checks: List[Check] = Field(
        [],
        title="The individual checks.",
    )


class ReesSweepEntry(BaseModel, extra="forbid"):
    """Defines a Rees spec found by a randomised sweep."""

    spec: construction.Rees = Field(
        title="The Rees matrix semigroup which was found.",
    )
    report: Rees = Field(
        title="The criteria report for the spec.",
    )


class ReesSweep(BaseModel, extra="forbid"):
    """Defines the result of a randomised search for Rees matrix semigroups whose
    convolution algebra has an identity with non-integral coefficients.
    """

    seed: int = Field(
        title="The seed of the random number generator.",
    )
    count: int = Field(
        title="The number of specs which were generated.",
    )
    found: List[ReesSweepEntry] = Field(
        [],
        title=(
            "The specs with a unital convolution algebra but a non-integral identity."
        ),
    )
