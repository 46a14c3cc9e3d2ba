"""Command-line interface.

Exit codes: 0 verification passed (or command succeeded), 1 verification
failed, 2 usage, structural or document error.
"""

import functools
import json
import logging
import sys
from typing import Callable, List, Optional, TextIO

import click
from pydantic import ValidationError

from hurwitz_composition.cli.document import (
    PairDocument, ProvenanceStep, SystemDocument, dumps_document, load_system, loads_document,
)
from hurwitz_composition.composition.config import CompositionConfig, SurveyConfig
from hurwitz_composition.composition.constructions import amicable_double, combine, double, extended_double
from hurwitz_composition.composition.generators import classical, hr_family
from hurwitz_composition.composition.oracle import check_identity, render, system_to_formula
from hurwitz_composition.composition.rho import rho
from hurwitz_composition.composition.search import max_r
from hurwitz_composition.composition.survey import CONSTRUCTIONS, Survey
from hurwitz_composition.composition.system import AmicablePair, HurwitzSystem
from hurwitz_composition.composition.verification import verify_amicable, verify_hurwitz
from hurwitz_composition.errors import HurwitzError, SearchBudgetExceeded

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _handle_errors(command: Callable) -> Callable:
    """Report library errors on stderr and exit with ``EXIT_ERROR``."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (HurwitzError, ValidationError) as exc:
            logger.debug("%s failed", command.__name__, exc_info=True)
            click.echo(f"error: {exc}", err=True)
            click.get_current_context().exit(EXIT_ERROR)

    return wrapper


def _config() -> CompositionConfig:
    return click.get_current_context().find_root().obj


def _read(stream: TextIO):
    source = getattr(stream, "name", "<stdin>")
    return loads_document(stream.read(), source=source), source


def _read_system(stream: TextIO) -> tuple[HurwitzSystem, SystemDocument]:
    document, source = _read(stream)
    return load_system(document, source=source), document


def _write(document, out: TextIO) -> None:
    out.write(dumps_document(document))


def _step(operation: str, **arguments) -> ProvenanceStep:
    return ProvenanceStep(operation=operation, arguments={key: str(value) for key, value in arguments.items()})


def _print_report(report, label: str) -> None:
    if report.passed:
        click.echo(f"{label}: pass", err=True)
        return
    failures = report.failures or [report]
    for failure in failures:
        click.echo(f"{label}: FAIL {failure.message}", err=True)


@click.group()
@click.option("--size-cap", type=click.IntRange(min=1), default=4096, show_default=True,
              help="Largest number of rows a construction may produce.")
@click.option("-v", "--verbose", count=True, help="Log to stderr (-v info, -vv debug).")
@click.pass_context
def cli(ctx: click.Context, size_cap: int, verbose: int) -> None:
    """Construct, combine and verify sum-of-squares formulas."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format=LOG_FORMAT,
            stream=sys.stderr,
        )
    ctx.obj = CompositionConfig(size_cap=size_cap)


# ---------------------------------------------------------------------- #
#  Generators                                                              #
# ---------------------------------------------------------------------- #


@cli.group()
def gen() -> None:
    """Generate a base system."""


@gen.command("classical")
@click.argument("dim", type=int)
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def gen_classical(dim: int, out: TextIO) -> None:
    """The classical [dim, dim, dim] system (dim in 1, 2, 4, 8)."""
    system = classical(dim)
    _write(SystemDocument.from_system(system, [_step("classical", dim=dim)]), out)


@gen.command("hr")
@click.argument("m", type=int)
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def gen_hr(m: int, out: TextIO) -> None:
    """The [rho(2^m), 2^m, 2^m] system."""
    system = hr_family(m, _config())
    _write(SystemDocument.from_system(system, [_step("hr_family", m=m)]), out)


# ---------------------------------------------------------------------- #
#  Constructions                                                           #
# ---------------------------------------------------------------------- #


@cli.command("double")
@click.argument("source", type=click.File("r"))
@click.option("--special", type=int, default=1, show_default=True, help="1-based special matrix.")
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def double_command(source: TextIO, special: int, out: TextIO) -> None:
    """[r, s, n] -> [r+1, 2s, 2n] by doubling."""
    system, document = _read_system(source)
    result = double(system, special, _config())
    provenance = document.provenance + [_step("double", special=special)]
    _write(SystemDocument.from_system(result, provenance), out)


@cli.command("amicable")
@click.argument("source", type=click.File("r"))
@click.option("--special", type=int, default=1, show_default=True, help="1-based special matrix.")
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def amicable_command(source: TextIO, special: int, out: TextIO) -> None:
    """Amicable doubling of (system, empty): amicable [r+1, 2s, 2n] and [1, 2s, 2n]."""
    system, document = _read_system(source)
    pair = amicable_double(AmicablePair(first=system), special, _config())
    provenance = document.provenance + [_step("amicable_double", special=special)]
    _write(PairDocument.from_pair(pair, provenance), out)


@cli.command("combine")
@click.argument("first", type=click.File("r"))
@click.argument("second", type=click.File("r"))
@click.option("--special", type=int, default=None, help="1-based B matrix of FIRST (default: last).")
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def combine_command(first: TextIO, second: TextIO, special: Optional[int], out: TextIO) -> None:
    """[r, s, n] and [r', s', n'] -> [r+r', 2ss', 2nn']."""
    system_a, document_a = _read_system(first)
    system_b, document_b = _read_system(second)
    result = combine(system_a, system_b, special, _config())
    provenance = document_a.provenance + document_b.provenance + [
        _step("combine", first=system_a.size, second=system_b.size)
    ]
    _write(SystemDocument.from_system(result, provenance), out)


@cli.command("extend")
@click.argument("source", type=click.File("r"))
@click.option("--k", "k", type=int, required=True, help="Extended doubling exponent (k >= 1).")
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def extend_command(source: TextIO, k: int, out: TextIO) -> None:
    """[r, s, n] -> [r + rho(2^(k-1)), 2^k s, 2^k n]."""
    system, document = _read_system(source)
    result = extended_double(system, k, _config())
    provenance = document.provenance + [_step("extended_double", k=k)]
    _write(SystemDocument.from_system(result, provenance), out)


# ---------------------------------------------------------------------- #
#  Inspection                                                              #
# ---------------------------------------------------------------------- #


@cli.command("verify")
@click.argument("source", type=click.File("r"))
@click.option("--oracle", is_flag=True, help="Also expand the identity as polynomials.")
@click.option("--all-failures", is_flag=True, help="Report every failing equation.")
@_handle_errors
def verify_command(source: TextIO, oracle: bool, all_failures: bool) -> None:
    """Check the Hurwitz equations (and amicability for pair documents)."""
    document, source_name = _read(source)
    ctx = click.get_current_context()

    if isinstance(document, PairDocument):
        pair = document.to_pair()
        report = verify_amicable(pair, all_failures=all_failures)
        _print_report(report, "amicable")
        systems = [pair.first] + ([pair.second] if pair.second is not None else [])
    else:
        system = load_system(document, source_name)
        report = verify_hurwitz(system, all_failures=all_failures)
        _print_report(report, f"hurwitz {system.size}")
        systems = [system]

    passed = report.passed
    if oracle:
        for system in systems:
            identity_report = check_identity(system_to_formula(system))
            if identity_report.passed:
                click.echo(f"oracle {system.size}: pass", err=True)
            else:
                click.echo(
                    f"oracle {system.size}: FAIL at {identity_report.monomial} "
                    f"(lhs {identity_report.lhs_coefficient}, rhs {identity_report.rhs_coefficient})",
                    err=True,
                )
                passed = False
    ctx.exit(EXIT_PASS if passed else EXIT_FAIL)


@cli.command("rho")
@click.argument("n", type=int)
@_handle_errors
def rho_command(n: int) -> None:
    """Print the Hurwitz-Radon number rho(n)."""
    click.echo(str(rho(n)))


@cli.command("emit")
@click.argument("source", type=click.File("r"))
@click.option("--format", "format_", type=click.Choice(["text", "latex"]), default="text", show_default=True)
@_handle_errors
def emit_command(source: TextIO, format_: str) -> None:
    """Print the identity a system encodes."""
    system, _ = _read_system(source)
    click.echo(render(system_to_formula(system), format_))


@cli.command("search")
@click.option("--s", "s", type=click.IntRange(min=1), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Branch-and-bound node budget.")
@click.option("--out", type=click.File("w"), default="-")
@_handle_errors
def search_command(s: int, n: int, budget: Optional[int], out: TextIO) -> None:
    """Exhaustive search for the largest integer [r, s, n] system."""
    ctx = click.get_current_context()
    try:
        result = max_r(s, n, budget=budget, config=_config())
    except SearchBudgetExceeded as exc:
        result = exc.best
        click.echo(f"search s={s} n={n}: inconclusive above r = {result.r_max} ({result.nodes} nodes)", err=True)
        if result.witness is not None:
            _write(SystemDocument.from_system(result.witness, [_step("search", s=s, n=n)]), out)
        ctx.exit(EXIT_ERROR)
    click.echo(
        f"search s={s} n={n}: r_max = {result.r_max} ({result.nodes} nodes, pool of {result.pool_size})",
        err=True,
    )
    if result.witness is not None:
        _write(SystemDocument.from_system(result.witness, [_step("search", s=s, n=n)]), out)


@cli.command("survey")
@click.option("--construction", "constructions", multiple=True, type=click.Choice(CONSTRUCTIONS))
@click.option("--k", "exponents", multiple=True, type=click.IntRange(min=1), help="extended_double exponents.")
@click.option("--no-oracle", is_flag=True, help="Skip the polynomial identity check.")
@_handle_errors
def survey_command(constructions: List[str], exponents: List[int], no_oracle: bool) -> None:
    """Run every construction over the classical systems; print JSON lines."""
    survey_config = SurveyConfig(
        constructions=list(constructions) or None,
        run_oracle=not no_oracle,
        **({"extension_exponents": list(exponents)} if exponents else {}),
    )
    records = Survey(_config()).run(survey_config)
    for record in records:
        click.echo(json.dumps(record, sort_keys=True))
    ctx = click.get_current_context()
    ctx.exit(EXIT_PASS if all(record["hurwitz_passed"] for record in records) else EXIT_FAIL)


if __name__ == "__main__":
    cli()
