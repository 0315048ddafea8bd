import typer

from lenscontact.dependencies.options import CsvOpt, EnvelopeOpt, JsonOpt, POpt, QOpt, emit, lens
from lenscontact.models.schemas import IntMatrix
from lenscontact.services.contfrac_service import contfrac_service
from lenscontact.services.tridiag_service import tridiag_service

router = typer.Typer(help="Linking matrix of the plumbing and A_pq = -p M^-1", no_args_is_help=True)


def _show(command: str, p: int, q: int, matrix: IntMatrix, json_out: bool, csv_out: bool, envelope: bool) -> None:
    columns = [f"c{j + 1}" for j in range(matrix.size)]
    emit(command, {"p": p, "q": q}, {"rows": [list(row) for row in matrix.rows]},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=columns, rows=[list(row) for row in matrix.rows])


@router.command("linking")
def linking(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Tridiagonal linking matrix M with diagonal a_i."""
    matrix = tridiag_service.linking_matrix(contfrac_service.expand(lens(p, q)))
    _show("matrix linking", p, q, matrix, json_out, csv_out, envelope)


@router.command("apq")
def apq(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """A_pq from the closed form d(a1..a_{i-1}) d(a_{j+1}..an)."""
    matrix = tridiag_service.apq_closed_form(contfrac_service.expand(lens(p, q)))
    _show("matrix apq", p, q, matrix, json_out, csv_out, envelope)


@router.command("oracle")
def oracle(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """A_pq by exact rational inversion, checked against the closed form."""
    cf = contfrac_service.expand(lens(p, q))
    tridiag_service.crosscheck(cf)
    _show("matrix oracle", p, q, tridiag_service.apq_oracle(cf), json_out, csv_out, envelope)
