"""Renders reports for human consumption.

SPDX-License-Identifier: BSD-3-Clause
"""

from typing import Any, List, Optional

import pydantic
from colorama import Fore, init
from semiact.action import helper, model
from semiact.action.__about__ import __version__

# Fields which are too large to be useful in a console summary.
SKIPPED = {"semigroup"}

NESTED = (
    model.report.Flags,
    model.report.Cover,
    model.report.Witness,
    model.report.LaurentInverse,
)

DECISIONS = {
    "Expansive": Fore.GREEN,
    "Invertible": Fore.GREEN,
    "NonExpansive": Fore.RED,
    "NotInvertible": Fore.RED,
    "Unknown": Fore.YELLOW,
    "Borderline": Fore.YELLOW,
}


def format_rational(pair: List[int]) -> str:
    if pair[1] == 1:
        return str(pair[0])

    return f"{pair[0]}/{pair[1]}"


def format_element(element: model.algebra.Element) -> str:
    """Returns an element as a sum of scaled deltas."""
    terms = []
    for index, value in element.coeffs.items():
        coefficient = format_rational(value[:2])
        if element.ring == "GaussRat" and value[2]:
            coefficient = f"({coefficient} + {format_rational(value[2:])}i)"
        terms.append(f"{coefficient} d{index}")

    return " + ".join(terms) or "0"


def format_value(value: Any) -> str:
    if isinstance(value, model.algebra.Element):
        return format_element(value)
    if isinstance(value, model.algebra.Matrix):
        return "; ".join(
            "[" + ", ".join(format_element(entry) for entry in row) + "]"
            for row in value.entries
        )
    if isinstance(value, model.presentation.TorusPoint):
        return "(" + ", ".join(format_rational(c) for c in value.coords) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(format_value(v) for v in value) + "]"

    return str(value)


def render_fields(report: pydantic.BaseModel, indent: int = 4):
    for name, value in report:
        if name in SKIPPED or value is None:
            continue

        if isinstance(value, NESTED):
            helper.printi(f"{Fore.YELLOW}{name}:", indent=indent)
            render_fields(value, indent=indent + 4)
            continue

        # Rationals are encoded as pairs, so render them as fractions.
        if name in ("optimal_constant", "theoretical_bound"):
            value = format_rational(value)
        if name == "functional":
            value = "(" + ", ".join(format_rational(c) for c in value) + ")"

        colour = Fore.RESET
        if isinstance(value, str):
            colour = DECISIONS.get(value, Fore.RESET)
        helper.printi(
            f"{Fore.YELLOW}{name:<24}{Fore.RESET}: {colour}{format_value(value)}",
            indent=indent,
        )


def render(
    command: str,
    report: pydantic.BaseModel,
    verification: Optional[model.report.Verification] = None,
):
    """Render a 'pretty' report to the console for human consumption."""
    init()
    print(helper.banner(version=__version__))
    print(f"{Fore.BLUE}Results of '{command}'{Fore.RESET}\n")

    render_fields(report)

    if verification is not None:
        colour = Fore.GREEN if verification.passed else Fore.RED
        status = "verified" if verification.passed else "FAILED"
        print(f"\n{colour}Certificates {status}")
        for check in verification.checks:
            colour = Fore.GREEN if check.passed else Fore.RED
            helper.printi(f"{colour}{check.name}: {'ok' if check.passed else 'FAILED'}")

    print(f"\n{Fore.RESET}{'-' * 78}\n")
