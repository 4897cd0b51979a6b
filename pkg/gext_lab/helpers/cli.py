import sys
from pathlib import Path
from typing import Any, Callable, Optional, Tuple

import click
from she_logging import logger

from gext_lab.config import RunConfig
from gext_lab.galoislab.controller import full_verify, lattice_report
from gext_lab.helpers.errors import (
    ConfigurationError,
    GextError,
    ReducibleDefiningPolynomial,
    TowerSyntaxError,
    UnknownIrreducibility,
)
from gext_lab.models.api_spec import emit_json
from gext_lab.models.report import CorrespondenceReport
from gext_lab.tower.parser import parse_tower
from gext_lab.tower.tower import FieldTower

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (
    ConfigurationError,
    TowerSyntaxError,
    ReducibleDefiningPolynomial,
    UnknownIrreducibility,
    OSError,
    UnicodeDecodeError,
)


def _options(command: Callable) -> Callable:
    for option in reversed(
        [
            click.argument("path", type=click.Path(dir_okay=False)),
            click.option("--json", "as_json", is_flag=True, help="Emit the JSON report."),
            click.option("--precision", type=int, help="Starting precision in bits."),
            click.option("--max-denominator", type=int, help="Denominator bound for rational reconstruction."),
            click.option("--subgroup-cap", type=int, help="Largest group whose subgroups are enumerated."),
            click.option("--mc-trials", type=int, help="Monte-Carlo trials for simplicity in characteristic p."),
            click.option("--trust-irreducible", is_flag=True, help="Accept undecided irreducibility."),
        ]
    ):
        command = option(command)
    return command


def _load(
    path: str,
    precision: Optional[int],
    max_denominator: Optional[int],
    subgroup_cap: Optional[int],
    mc_trials: Optional[int],
    trust_irreducible: Optional[bool],
) -> Tuple[FieldTower, RunConfig]:
    config = RunConfig.from_env(
        precision=precision,
        max_denominator=max_denominator,
        subgroup_cap=subgroup_cap,
        mc_trials=mc_trials,
        trust_irreducible=trust_irreducible or None,
    )
    text = Path(path).read_text(encoding="utf-8")
    tower = parse_tower(text, trust_irreducible=config.trust_irreducible)
    return tower, config


def _emit(report: CorrespondenceReport, as_json: bool, include_theorems: bool) -> None:
    if as_json:
        click.echo(emit_json(report))
    else:
        for line in report.text_lines(include_theorems=include_theorems):
            click.echo(line)


def _run(path: str, as_json: bool, verify: bool, **flags: Any) -> int:
    try:
        tower, config = _load(path, **flags)
    except INPUT_ERRORS as e:
        click.echo(f"{path}: {e}", err=True)
        return EXIT_INPUT
    try:
        report = full_verify(tower, config) if verify else lattice_report(tower, config)
    except GextError as e:
        logger.warning("Lattice computation failed for %s", path, extra={"error": str(e)})
        click.echo(f"{path}: {e}", err=True)
        return EXIT_FAILED
    _emit(report, as_json, include_theorems=verify)
    return EXIT_FAILED if report.failed else EXIT_OK


@click.group()
def cli() -> None:
    """Verify the Galois correspondences on a tower of finite field extensions."""


@cli.command("verify")
@_options
def cmd_verify(path: str, as_json: bool, **flags: Any) -> None:
    """Run every check on the tower in PATH."""
    sys.exit(_run(path, as_json, verify=True, **flags))


@cli.command("report")
@_options
def cmd_report(path: str, as_json: bool, **flags: Any) -> None:
    """Print the subgroup and subfield lattices of the tower in PATH."""
    sys.exit(_run(path, as_json, verify=False, **flags))
