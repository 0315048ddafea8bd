from typing import Annotated, Optional

import typer

from lenscontact.core.errors import InternalConsistencyError
from lenscontact.dependencies.options import CsvOpt, EnvelopeOpt, JsonOpt, emit
from lenscontact.orchestrator.sweep_orchestrator import sweep_orchestrator


def sweep(
    check: Annotated[str, typer.Option("--check", help="Name of the finite verification to run")],
    pmax: Annotated[Optional[int], typer.Option("--pmax", help="Largest p to sweep (check default if omitted)")] = None,
    workers: Annotated[Optional[int], typer.Option("--workers", help="Worker processes (default LENSCONTACT_WORKERS)")] = None,
    out: Annotated[Optional[str], typer.Option("--out", help="Certificate path, '-' for stdout")] = None,
    progress: Annotated[bool, typer.Option("--progress", help="Progress bar on stderr")] = False,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Run a sweep and write an NDJSON certificate with one row per case."""
    if out == "-":
        summary = sweep_orchestrator.run(
            check, pmax, workers, progress=progress,
            sink=lambda line: typer.echo(line.decode(), nl=False),
        )
    else:
        summary = sweep_orchestrator.run(check, pmax, workers, out=out, progress=progress)
        emit("sweep", {"check": check, "pmax": pmax}, summary.model_dump(),
             json_out=json_out, csv_out=csv_out, envelope=envelope)
    if not summary.ok:
        raise InternalConsistencyError(
            f"sweep {check}: {summary.failed} of {summary.rows} cases failed",
            first_failure=summary.first_failure,
        )
