"""Defines the primary semiact CLI entrypoint.

SPDX-License-Identifier: BSD-3-Clause
"""

import functools
import logging
import sys
from typing import Any, Callable, Optional, Tuple

import click
import pydantic
import semiact.action
from semiact.action import constants, model
from semiact.action.exceptions import NoLeftIdentityException, SemiactException

logger = logging.getLogger("semiact")


def configure(debug: bool):
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(asctime)s - %(process)d - [%(levelname)s] %(message)s",
        force=True,
    )


def common_options(function: Callable) -> Callable:
    """Adds the options shared by every command."""

    @click.option(
        "--debug",
        is_flag=True,
        envvar="SEMIACT_DEBUG",
        help="Increase verbosity of logs for debugging",
    )
    @click.option(
        "--verify",
        is_flag=True,
        help="Re-verify every certificate in the report before emitting it.",
    )
    @click.option(
        "--format",
        "output_format",
        type=click.Choice(["json", "text"]),
        default="json",
        envvar="SEMIACT_FORMAT",
        help="Emit the report as JSON, or as human-readable text.",
    )
    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        configure(kwargs["debug"])
        return function(*args, **kwargs)

    return wrapper


def input_option(required: bool = True) -> Callable:
    return click.option(
        "--input",
        "source",
        required=required,
        help="The path to the input document, or the document as inline JSON.",
    )


def budget_option(default: int) -> Callable:
    return click.option(
        "--budget",
        type=click.IntRange(min=1),
        default=default,
        envvar="SEMIACT_BUDGET",
        show_default=True,
        help="The maximum number of candidates to enumerate.",
    )


def emit(
    command: str,
    report: pydantic.BaseModel,
    output_format: str,
    verify: bool,
    subject: Any = None,
    exit_code: int = constants.EXIT_CODE_DECIDED,
):
    """Optionally verifies the report, renders it, and exits with the given status."""
    verification = None
    if verify:
        logger.info("Re-verifying certificates in the report")
        try:
            certificate = semiact.action.verify.certificate
            verification = certificate.verify_report(report, subject)
        except SemiactException as err:
            logger.error(f"Unable to verify report: {err}")
            sys.exit(constants.EXIT_CODE_INPUT_ERROR)

        for check in verification.checks:
            logger.debug(f"Check '{check.name}' passed: {check.passed}")

    if output_format == "text":
        semiact.action.output.pretty.render(command, report, verification)
    else:
        print(semiact.action.output.document.render(report))

    if verification is not None and not verification.passed:
        logger.error("One or more certificates failed re-verification")
        sys.exit(constants.EXIT_CODE_INPUT_ERROR)

    sys.exit(exit_code)


def fail(message: str, err: Exception):
    logger.error(f"{message}: {err}")
    sys.exit(constants.EXIT_CODE_INPUT_ERROR)


def parse_params(params: Tuple[str, ...]) -> dict:
    """Parses KEY=VALUE family parameters, with integer values."""
    parsed = {}
    for param in params:
        key, sep, value = param.partition("=")
        if not sep:
            raise click.BadParameter(f"'{param}' is not of the form KEY=VALUE")
        try:
            parsed[key] = int(value)
        except ValueError:
            raise click.BadParameter(f"'{value}' is not an integer")

    return parsed


@click.group()
@click.version_option(package_name="semiact")
def main() -> None:
    """semiact - Expansivity of algebraic actions of finite semigroups."""


@main.command()
@input_option()
@budget_option(constants.COVER_BUDGET)
@common_options
def analyze(source: str, budget: int, output_format: str, verify: bool, debug: bool):
    """Analyse the structure, covers and convolution identities of a semigroup."""
    try:
        document = semiact.action.loader.document.load(source, model.semigroup.Document)
        semigroup = semiact.action.construction.family.from_document(document)
        logger.info(f"Analysing semigroup of order {semigroup.size}")
        report = semiact.action.semigroup.analysis.analyze(semigroup, budget=budget)
    except SemiactException as err:
        fail("Unable to analyse semigroup", err)

    emit("analyze", report, output_format, verify)


@main.command()
@input_option()
@budget_option(constants.ENUMERATION_BUDGET)
@common_options
def action(source: str, budget: int, output_format: str, verify: bool, debug: bool):
    """Decide expansivity of the action of a semigroup on X_J."""
    try:
        document = semiact.action.loader.document.load(
            source, model.presentation.Document
        )
        presentation = semiact.action.loader.document.to_presentation(document)
        logger.info(
            f"Deciding expansivity for a {presentation.n}x{presentation.k} "
            f"presentation over a semigroup of order {presentation.semigroup.size}"
        )
        report = semiact.action.dynamics.expansivity.decide_expansive(
            presentation, budget=budget
        )
    except SemiactException as err:
        fail("Unable to decide expansivity", err)

    exit_code = constants.EXIT_CODE_DECIDED
    if report.decision == "Unknown":
        exit_code = constants.EXIT_CODE_UNKNOWN

    emit("action", report, output_format, verify, presentation, exit_code)


@main.command()
@input_option()
@common_options
def theoremb(source: str, output_format: str, verify: bool, debug: bool):
    """Search for a right invertible witness B in A Z[S]^k."""
    try:
        document = semiact.action.loader.document.load(
            source, model.presentation.Document
        )
        presentation = semiact.action.loader.document.to_presentation(document)
    except SemiactException as err:
        fail("Unable to load presentation", err)

    try:
        witness = semiact.action.invertibility.witness.theorem_b_witness(presentation)
        if witness is None:
            report = model.report.TheoremB(
                present=False,
                reason="A * X = Re{I} has no solution over the rationals.",
            )
        else:
            report = witness.to_report()
    except NoLeftIdentityException as err:
        report = model.report.TheoremB(present=False, reason=str(err))
    except SemiactException as err:
        fail("Unable to search for a witness", err)

    emit("theoremb", report, output_format, verify, presentation)


@main.command()
@input_option(required=False)
@click.option(
    "--sweep",
    type=click.IntRange(min=1),
    help="Search this many random specs for a non-integral identity, instead.",
)
@click.option(
    "--seed",
    default=0,
    help="The seed used for random sweeps.",
)
@click.option(
    "--threads",
    help="The number of threads to use when sweeping.",
    default=4,
)
@common_options
def rees(
    source: Optional[str],
    sweep: Optional[int],
    seed: int,
    threads: int,
    output_format: str,
    verify: bool,
    debug: bool,
):
    """Report the criteria of a Rees matrix semigroup M0(G; I, Lambda; P)."""
    construction = semiact.action.construction
    if sweep is not None:
        logger.info(f"Sweeping {sweep} random specs with seed {seed}")
        try:
            groups = [construction.family.cyclic_group(m) for m in (1, 2, 3)]
            found = construction.rees.rees_sweep(seed, sweep, groups, workers=threads)
        except SemiactException as err:
            fail("Unable to complete sweep", err)

        report = model.report.ReesSweep(
            seed=seed,
            count=sweep,
            found=[
                model.report.ReesSweepEntry(spec=spec.to_document(), report=result)
                for spec, result in found
            ],
        )
        return emit("rees", report, output_format, verify)

    if source is None:
        raise click.UsageError("One of --input or --sweep is required.")

    try:
        document = semiact.action.loader.document.load(source, model.construction.Rees)
        spec = construction.rees.from_document(document)
        report = construction.rees.rees_report(spec)
    except SemiactException as err:
        fail("Unable to build Rees matrix semigroup", err)

    emit("rees", report, output_format, verify)


@main.command()
@input_option()
@common_options
def union(source: str, output_format: str, verify: bool, debug: bool):
    """Report on a disjoint union of semigroups with an adjoined zero."""
    construction = semiact.action.construction
    try:
        document = semiact.action.loader.document.load(source, model.construction.Union)
        report = construction.union.union_report(
            construction.union.from_document(document)
        )
    except SemiactException as err:
        fail("Unable to build disjoint union", err)

    emit("union", report, output_format, verify)


@main.command()
@input_option()
@click.option(
    "--terms",
    type=click.IntRange(min=0),
    default=constants.LAURENT_TERMS,
    show_default=True,
    help="The number of series terms per root of the truncated inverse.",
)
@click.option(
    "--tolerance",
    type=float,
    help="Fail if the a-priori tail bound of the truncated inverse exceeds this.",
)
@common_options
def laurent(
    source: str,
    terms: int,
    tolerance: Optional[float],
    output_format: str,
    verify: bool,
    debug: bool,
):
    """Decide invertibility of an element of Z[Z] in l1(Z)."""
    invertibility = semiact.action.invertibility.laurent
    try:
        document = semiact.action.loader.document.load(source, model.laurent.Document)
        element = invertibility.from_document(document)
        report = invertibility.laurent_invertible(element)
        if report.decision == "Invertible":
            inverse = invertibility.laurent_inverse_truncated(
                element, terms=terms, tol=tolerance
            )
            report = report.model_copy(update={"inverse": inverse})
    except SemiactException as err:
        fail("Unable to decide invertibility", err)

    exit_code = constants.EXIT_CODE_DECIDED
    if report.decision == "Borderline":
        exit_code = constants.EXIT_CODE_UNKNOWN

    emit("laurent", report, output_format, verify, element, exit_code)


@main.command()
@click.argument("name", required=False)
@click.option(
    "--param",
    "params",
    multiple=True,
    help="A family parameter as KEY=VALUE, for example m=3.",
)
@input_option(required=False)
@common_options
def family(
    name: Optional[str],
    params: Tuple[str, ...],
    source: Optional[str],
    output_format: str,
    verify: bool,
    debug: bool,
):
    """Build and report on a named semigroup family."""
    arguments: dict = parse_params(params)
    if source is not None:
        try:
            document = semiact.action.loader.document.load(
                source, model.semigroup.Document
            )
        except SemiactException as err:
            fail("Unable to load family", err)
        if document.family is None:
            raise click.UsageError("The input document does not name a family.")

        name, arguments = document.family, document.params or {}

    if name is None:
        raise click.UsageError("A family NAME or --input is required.")

    try:
        report = semiact.action.construction.family.family_report(name, arguments)
    except SemiactException as err:
        fail("Unable to build family", err)

    emit("family", report, output_format, verify)

