"""Re-checks every certificate in a report without recomputing any decision.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from fractions import Fraction
from typing import Any, Callable, List, Optional

import numpy as np
import pydantic
from semiact.action import helper, model
from semiact.action.algebra import element, linear
from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring
from semiact.action.constants import FLOAT_SLACK
from semiact.action.duality import torus
from semiact.action.duality.module import ModulePresentation, z_generator_matrix
from semiact.action.dynamics.expansivity import prefix_rank
from semiact.action.dynamics.metric import separation
from semiact.action.exceptions import SemiactException, VerificationException
from semiact.action.invertibility.laurent import LaurentElem
from semiact.action.invertibility.witness import module_membership
from semiact.action.semigroup import table
from semiact.action.semigroup.cover import left_cover_check
from semiact.action.semigroup.table import FiniteSemigroup

logger = logging.getLogger(__name__)


class Checker:
    """Collects the outcome of individual certificate checks."""

    def __init__(self):
        self.checks: List[model.report.Check] = []

    def check(self, name: str, function: Callable[[], bool], detail: str = None):
        try:
            passed = bool(function())
        except SemiactException as err:
            passed, detail = False, str(err)

        if not passed:
            logger.warning(f"Certificate check '{name}' failed")

        self.checks.append(model.report.Check(name=name, passed=passed, detail=detail))

    def result(self) -> model.report.Verification:
        return model.report.Verification(
            passed=all(c.passed for c in self.checks),
            checks=self.checks,
        )


def _idempotent_cover(semigroup: FiniteSemigroup, elements: List[int]) -> bool:
    idempotents = set(table.idempotents(semigroup))
    return set(elements) <= idempotents and left_cover_check(semigroup, elements)


def _semigroup_checks(
    checker: Checker,
    semigroup: FiniteSemigroup,
    cover: Optional[List[int]] = None,
    idempotent_cover: Optional[List[int]] = None,
    left_identity: Optional[model.algebra.Element] = None,
    identity: Optional[model.algebra.Element] = None,
):
    if cover is not None:
        checker.check("cover", lambda: left_cover_check(semigroup, cover))
    if idempotent_cover is not None:
        checker.check(
            "idempotent cover", lambda: _idempotent_cover(semigroup, idempotent_cover)
        )
    if left_identity is not None:
        checker.check(
            "left identity",
            lambda: linear.is_left_identity(
                element.from_document(left_identity, semigroup)
            ),
        )
    if identity is not None:
        checker.check(
            "identity",
            lambda: linear.is_two_sided_identity(
                element.from_document(identity, semigroup)
            ),
        )


def _annihilates(presentation: ModulePresentation, functional: List[Fraction]) -> bool:
    if not any(functional):
        return False

    generator = z_generator_matrix(presentation).to_list()
    for column in range(len(generator[0])):
        total = sum(
            (
                functional[row] * int(generator[row][column])
                for row in range(len(generator))
            ),
            Fraction(0),
        )
        if total:
            return False

    vector = torus.functional_to_elements(functional, presentation.semigroup)
    dual = algmatrix.matrix_dual_apply(vector, presentation.matrix.to_ring(Ring.RAT))
    return all(entry.is_zero() for entry in dual)


def _arc(presentation: ModulePresentation, functional: List[Fraction]) -> bool:
    width = presentation.semigroup.size
    return all(
        torus.membership_check(torus.arc_point(functional, scale, width), presentation)
        for scale in (Fraction(1, 3), Fraction(1, 2), Fraction(5, 7))
    )


def _pair(presentation: ModulePresentation, witness: model.report.Witness) -> bool:
    width = presentation.semigroup.size
    x = torus.from_document(witness.x, width)
    y = torus.from_document(witness.y, width)

    return (
        x != y
        and torus.membership_check(x, presentation)
        and torus.membership_check(y, presentation)
        and separation(x, y, presentation.semigroup) == 0
    )


def verify_expansivity(
    report: model.report.Expansivity,
    presentation: ModulePresentation,
) -> model.report.Verification:
    checker = Checker()
    semigroup = presentation.semigroup
    norm = int(presentation.matrix.norm_l1())

    checker.check("matrix norm", lambda: report.matrix_norm == norm)
    _semigroup_checks(checker, semigroup, cover=report.cover)

    if report.theoretical_bound is not None:
        checker.check(
            "theoretical bound",
            lambda: helper.decode_rational(report.theoretical_bound)
            == Fraction(1, 2 ** (prefix_rank(report.cover) + 1) * norm),
        )
    if report.optimal_constant is not None and report.theoretical_bound is not None:
        checker.check(
            "optimal constant above bound",
            lambda: helper.decode_rational(report.optimal_constant)
            >= helper.decode_rational(report.theoretical_bound),
        )

    witness = report.witness
    if witness is not None and witness.kind == "annihilator":
        functional = [helper.decode_rational(c) for c in witness.functional or []]
        checker.check("annihilator", lambda: _annihilates(presentation, functional))
        checker.check("torus arc", lambda: _arc(presentation, functional))
    if witness is not None and witness.kind == "pair":
        checker.check("non-separated pair", lambda: _pair(presentation, witness))

    return checker.result()


def verify_theorem_b(
    report: model.report.TheoremB,
    presentation: ModulePresentation,
) -> model.report.Verification:
    checker = Checker()
    if not report.present:
        return checker.result()

    semigroup = presentation.semigroup
    e = element.from_document(report.left_identity, semigroup).to_ring(Ring.RAT)
    identity = AlgMat.identity(e, presentation.n).real_part()
    b = algmatrix.from_document(report.B, semigroup)
    c = algmatrix.from_document(report.C, semigroup).to_ring(Ring.RAT)
    x = algmatrix.from_document(report.X, semigroup).to_ring(Ring.RAT)
    a = presentation.matrix.to_ring(Ring.RAT)

    checker.check("left identity", lambda: linear.is_left_identity(e))
    checker.check("B integral", lambda: b.ring is Ring.INT)
    checker.check("A X = Re{I}", lambda: a * x == identity)
    checker.check(
        "B = A (mX)", lambda: b.to_ring(Ring.RAT) == a * x.scale(report.scalar)
    )
    checker.check("B C = Re{I}", lambda: b.to_ring(Ring.RAT) * c == identity)
    checker.check(
        "B in A Z[S]^k",
        lambda: all(
            module_membership([int(v) for v in algmatrix.flatten(column)], presentation)
            for column in b.columns()
        ),
    )
    if report.two_sided:
        checker.check("C B = Re{I}", lambda: c * b.to_ring(Ring.RAT) == identity)

    return checker.result()


def verify_laurent(
    report: model.report.Laurent,
    a: LaurentElem,
) -> model.report.Verification:
    checker = Checker()
    inverse = report.inverse
    if inverse is None:
        return checker.result()

    product = np.convolve(np.array(a.coeffs, dtype=float), np.array(inverse.coeffs))
    product[-(a.lo + inverse.lo)] -= 1.0
    measured = float(np.abs(product).sum())

    checker.check(
        "residual", lambda: abs(measured - inverse.residual) <= 1e-9 + FLOAT_SLACK
    )
    checker.check(
        "tail bound",
        lambda: measured <= inverse.tail_bound * (1 + 1e-9) + FLOAT_SLACK,
    )

    return checker.result()


def verify_report(
    document: pydantic.BaseModel, subject: Any = None
) -> model.report.Verification:
    """Re-verifies every certificate of a report.

    Reports which embed their semigroup are checked against it; expansivity and
    witness reports need the presentation, and Laurent reports the element.
    """
    if isinstance(document, model.report.Expansivity):
        return verify_expansivity(document, subject)
    if isinstance(document, model.report.TheoremB):
        return verify_theorem_b(document, subject)
    if isinstance(document, model.report.Laurent):
        return verify_laurent(document, subject)
    if isinstance(document, model.report.ReesSweep):
        checks = [verify_report(entry.report) for entry in document.found]
        return model.report.Verification(
            passed=all(c.passed for c in checks),
            checks=[check for c in checks for check in c.checks],
        )

    checker = Checker()
    if isinstance(document, model.report.Analysis):
        semigroup = table.from_document(document.semigroup)
        _semigroup_checks(
            checker,
            semigroup,
            cover=document.cover.elements if document.cover else None,
            idempotent_cover=document.idempotent_cover,
            left_identity=document.left_identity,
            identity=document.identity,
        )
        if document.regular_cover is not None:
            checker.check(
                "regular cover",
                lambda: _idempotent_cover(semigroup, document.regular_cover),
            )
    elif isinstance(document, model.report.Rees):
        _semigroup_checks(
            checker,
            table.from_document(document.semigroup),
            cover=document.cover,
            idempotent_cover=document.idempotents,
            identity=document.identity,
        )
    elif isinstance(document, (model.report.Union, model.report.Family)):
        _semigroup_checks(
            checker,
            table.from_document(document.semigroup),
            left_identity=document.left_identity,
        )
    else:
        raise VerificationException(f"Unable to verify {type(document).__name__}")

    return checker.result()
