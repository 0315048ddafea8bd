"""
Shared CLI options and the single output path every command goes through:
a fixed-width rich table by default, or JSON / CSV on request.
"""
import csv
import io
import sys
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional, Sequence

import typer
from rich import box
from rich.console import Console
from rich.table import Table

from lenscontact.core.config import settings
from lenscontact.core.errors import UsageError
from lenscontact.core.serialization import dumps, format_rational
from lenscontact.models.schemas import LensSpace, OutputEnvelope

# ── options ────────────────────────────────────────────────────────────────
POpt = Annotated[int, typer.Option("-p", help="Order p of H1(L(p,q))")]
QOpt = Annotated[int, typer.Option("-q", help="Twisting parameter q, coprime to p")]
JsonOpt = Annotated[bool, typer.Option("--json", help="Print JSON instead of a table")]
CsvOpt = Annotated[bool, typer.Option("--csv", help="Print CSV instead of a table")]
EnvelopeOpt = Annotated[bool, typer.Option("--envelope", help="With --json, wrap the result in an envelope")]
CapOpt = Annotated[
    Optional[int],
    typer.Option("--cap", help="Refuse to enumerate more structures than this (default LENSCONTACT_MAX_STRUCTURES)"),
]
CoeffsOpt = Annotated[str, typer.Option("--coeffs", help="Continued fraction, e.g. '-4,-2'")]


def lens(p: int, q: int) -> LensSpace:
    return LensSpace(p=p, q=q)


def parse_ints(text: str, name: str = "coeffs") -> List[int]:
    cleaned = text.strip().strip("[]()").replace(",", " ")
    try:
        return [int(token) for token in cleaned.split()]
    except ValueError:
        raise UsageError(f"--{name} must be a list of integers, got '{text}'", value=text)


# ── rendering ──────────────────────────────────────────────────────────────
def cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        return " ".join(cell(v) for v in value)
    if value is None:
        return ""
    return str(value)


def _console() -> Console:
    return Console(
        file=sys.stdout,
        width=settings.TABLE_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
    )


def emit(
    command: str,
    parameters: Dict[str, Any],
    payload: Dict[str, Any],
    *,
    json_out: bool = False,
    csv_out: bool = False,
    envelope: bool = False,
    columns: Optional[Sequence[str]] = None,
    rows: Optional[Sequence[Sequence[Any]]] = None,
    text: Optional[str] = None,
) -> None:
    if json_out:
        body: Any = payload
        if envelope:
            body = OutputEnvelope(
                command=command, parameters=parameters, result=payload, version=settings.VERSION
            ).model_dump()
        typer.echo(dumps(body).decode())
        return

    if columns is None:
        columns = ["field", "value"]
        rows = [[key, value] for key, value in payload.items()]
    rows = rows or []

    if csv_out:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows([[cell(v) for v in row] for row in rows])
        typer.echo(buffer.getvalue(), nl=False)
        return

    if text is not None:
        typer.echo(text)
        return

    table = Table(box=box.SIMPLE, show_edge=False)
    for name in columns:
        table.add_column(name)
    for row in rows:
        table.add_row(*[cell(v) for v in row])
    _console().print(table)
