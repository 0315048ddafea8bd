"""
Root CLI: assembles the command groups and maps domain errors onto the exit
code contract (0 ok, 2 usage, 3 capacity, 4 internal consistency).
"""
import logging
import sys
from typing import Dict, List, Optional

import click
import typer

from lenscontact.core.config import settings
from lenscontact.core.errors import LensContactError
from lenscontact.core.logging import configure_logging
from lenscontact.core.serialization import dumps
from lenscontact.routers import cable, casson, cf, matrix, obstruct, sweep, tight

logger = logging.getLogger("lenscontact.main")

app = typer.Typer(
    name=settings.PROJECT_NAME,
    help="Exact invariants of tight contact structures on lens spaces and reducible surgery obstructions.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

# Include Routers
app.add_typer(cf.router, name="cf")
app.add_typer(matrix.router, name="matrix")
app.add_typer(tight.router, name="tight")
app.add_typer(obstruct.router, name="obstruct")
app.add_typer(cable.router, name="cable")
app.add_typer(casson.router, name="casson")
app.command("rot")(obstruct.rot)
app.command("feasible")(obstruct.feasible)
app.command("classify-tb")(obstruct.classify_tb)
app.command("candidates")(obstruct.candidates)
app.command("sweep")(sweep.sweep)


def _version(value: bool):
    if value:
        typer.echo(settings.VERSION)
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", help="Print the version and exit", is_eager=True, callback=_version
    ),
):
    pass


# Library operation -> the one command that exposes it
OPERATIONS: Dict[str, str] = {
    "contfrac.expand": "cf expand",
    "contfrac.evaluate": "cf eval",
    "contfrac.det_d": "cf det",
    "contfrac.reverse": "cf reverse",
    "contfrac.inverse_partner": "cf partner",
    "contfrac.canonical": "cf canonical",
    "contfrac.homeomorphic": "cf homeo",
    "contfrac.lens_spaces": "cf list",
    "tridiag.linking_matrix": "matrix linking",
    "tridiag.apq_closed_form": "matrix apq",
    "tridiag.apq_oracle": "matrix oracle",
    "tight.count": "tight count",
    "tight.enumerate": "tight list",
    "tight.xi_can": "tight xican",
    "tight.conjugate": "tight conj",
    "tight.self_conjugate": "tight selfconj",
    "tight.d3": "tight d3",
    "tight.d3_values": "tight spectrum",
    "tight.f_direct": "tight f",
    "tight.f_recursive": "tight frec",
    "tight.f_n2_closed_form": "tight fcheck",
    "tight.count_upper_bound": "tight count-bound",
    "tight.d3_lower_bound": "tight d3-bound",
    "obstruct.d3_from_surgery": "obstruct d3",
    "obstruct.d3_connected_sum": "obstruct sum",
    "obstruct.rotation_numbers": "rot",
    "obstruct.stabilization_set": "obstruct stab",
    "obstruct.summand_feasible": "feasible",
    "obstruct.classify_negative_tb": "classify-tb",
    "obstruct.normalized_t": "obstruct t",
    "obstruct.reducible_d3_ceiling": "obstruct ceiling",
    "obstruct.self_linking_obstruction": "obstruct self-linking",
    "obstruct.large_negative_verdict": "obstruct large-negative",
    "obstruct.candidate_summands": "candidates",
    "obstruct.lp3_pair_check": "obstruct lp3",
    "obstruct.lp3_diophantine": "obstruct lp3",
    "obstruct.l4k3_rotation_numbers": "obstruct l4k3",
    "cables.cable_tb_bounds": "cable tb",
    "cables.p_copy_front": "cable pcopy",
    "cables.twist_adjust": "cable twist",
    "cables.cable_genus": "cable genus",
    "cables.cable_identity_check": "cable identity",
    "cables.bennequin_upper": "cable bennequin",
    "cables.cable_tower": "cable tower",
    "casson.parse_polynomial": "casson parse",
    "casson.half_second_derivative": "casson a2",
    "casson.casson_surgery_delta": "casson delta",
    "casson.parity_obstruction": "casson parity",
    "casson.tb_negative_arf_verdict": "casson arf",
    "sweep.run": "sweep",
}


def _report(exc: LensContactError) -> None:
    typer.echo(f"error: {exc.message}", err=True)
    if exc.detail:
        typer.echo(dumps(exc.to_dict()).decode(), err=True)


def run(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        result = app(args=args, prog_name=settings.PROJECT_NAME, standalone_mode=False)
    except LensContactError as exc:
        logger.debug(f"{type(exc).__name__}: {exc.message}")
        _report(exc)
        return exc.exit_code
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        typer.echo("aborted", err=True)
        return 1
    return result if isinstance(result, int) else 0
