"""Implements invertibility of finitely supported elements of l1(Z).

An element a of Z[Z] is invertible in l1(Z) exactly when its Laurent symbol has no
zeros on the unit circle.

SPDX-License-Identifier: BSD-3-Clause
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from semiact.action import model
from semiact.action.constants import LAURENT_TAU, LAURENT_TAU_STRICT, LAURENT_TERMS
from semiact.action.exceptions import (
    BudgetException,
    NotInvertibleException,
    ZeroElementException,
)
from sympy import Poly, gcd, symbols

logger = logging.getLogger(__name__)

z = symbols("z")


@dataclass(frozen=True)
class LaurentElem:
    """The element a(lo) delta_lo + ... + a(hi) delta_hi, trimmed of zero ends."""

    lo: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        lo = self.lo
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            lo += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()

        object.__setattr__(self, "lo", lo if coeffs else 0)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def symbol(self) -> Poly:
        """Returns the polynomial z^-lo a(z)."""
        return Poly(list(reversed(self.coeffs)), z)


def from_document(document: model.laurent.Document) -> LaurentElem:
    return LaurentElem(document.lo, tuple(document.coeffs))


def _roots(poly: Poly) -> np.ndarray:
    if poly.degree() < 1:
        return np.array([], dtype=complex)

    return np.roots([float(c) for c in poly.all_coeffs()]).astype(complex)


def _sorted_roots(roots: np.ndarray) -> List[complex]:
    return sorted((complex(r) for r in roots), key=lambda r: (r.real, r.imag))


def laurent_invertible(
    a: LaurentElem,
    tau: float = LAURENT_TAU,
    tau_strict: float = LAURENT_TAU_STRICT,
) -> model.report.Laurent:
    """Decides invertibility of a in l1(Z) from the roots of its symbol p.

    A root on the unit circle is also a root of the reversed polynomial, so a constant
    gcd of p and its reversal certifies invertibility exactly. Otherwise the roots of
    the square-free part of the gcd are located numerically, and compared against
    the tolerances.
    """
    if a.is_zero():
        raise ZeroElementException("The zero element is not invertible.")

    poly = a.symbol()
    roots = _sorted_roots(_roots(poly))
    fields = dict(
        roots=[[r.real, r.imag] for r in roots],
        moduli=[abs(r) for r in roots],
    )

    reverse = Poly(list(a.coeffs), z)
    common = gcd(poly, reverse)
    if common.degree() < 1:
        return model.report.Laurent(decision="Invertible", certified=True, **fields)

    if poly.eval(1) == 0 or poly.eval(-1) == 0:
        return model.report.Laurent(decision="NotInvertible", certified=True, **fields)

    squarefree = common.quo(gcd(common, common.diff(z)))
    distance = min(abs(abs(r) - 1) for r in _roots(squarefree))
    logger.debug(f"Closest root of the symbol is {distance} from the unit circle")

    if distance > tau:
        decision = "Invertible"
    elif distance <= tau_strict:
        decision = "NotInvertible"
    else:
        decision = "Borderline"

    return model.report.Laurent(decision=decision, certified=False, **fields)


def _convolve(
    left: Tuple[int, np.ndarray],
    right: Tuple[int, np.ndarray],
) -> Tuple[int, np.ndarray]:
    """Convolves two windows given as (lowest exponent, coefficients)."""
    return left[0] + right[0], np.convolve(left[1], right[1])


def laurent_inverse_truncated(
    a: LaurentElem,
    terms: int = LAURENT_TERMS,
    tol: Optional[float] = None,
) -> model.report.LaurentInverse:
    """Returns a truncated l1 inverse b of an invertible a, with its residual.

    The symbol c (z - r_1) ... (z - r_d) is inverted factor by factor with geometric
    series, outside the unit circle in powers of z and inside in powers of 1 / z, each
    truncated after `terms` + 1 terms. Each factor is then off by at most q^(terms + 1)
    with q = min(|r|, 1 / |r|), which gives the a-priori tail bound.
    """
    decision = laurent_invertible(a)
    if decision.decision != "Invertible":
        raise NotInvertibleException(f"Element is {decision.decision}")

    poly = a.symbol()
    leading = float(poly.LC())
    window: Tuple[int, np.ndarray] = (0, np.array([1.0 / leading], dtype=complex))
    bound = 1.0
    powers = np.arange(terms + 1)

    for root in _roots(poly):
        if abs(root) > 1:
            factor = (0, -(root ** -(powers + 1.0)))
        else:
            factor = (-(terms + 1), (root**powers)[::-1])
        window = _convolve(window, factor)
        q = min(abs(root), 1 / abs(root))
        bound *= 1 + q ** (terms + 1)

    lo = window[0] - a.lo
    coeffs = window[1].real

    product_lo, product = _convolve(
        (a.lo, np.array(a.coeffs, dtype=float)), (lo, coeffs)
    )
    product[-product_lo] -= 1.0
    residual = float(np.abs(product).sum())

    tail = bound - 1.0
    if tol is not None and tail > tol:
        raise BudgetException(f"Tail bound {tail} exceeds {tol} with {terms} terms")

    return model.report.LaurentInverse(
        lo=lo,
        coeffs=[float(c) for c in coeffs],
        terms=terms,
        residual=residual,
        tail_bound=tail,
    )
