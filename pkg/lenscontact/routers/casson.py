from typing import Annotated

import orjson
import typer

from lenscontact.core.errors import PolynomialSyntaxError
from lenscontact.core.serialization import format_rational
from lenscontact.dependencies.options import CsvOpt, EnvelopeOpt, JsonOpt, emit
from lenscontact.models.schemas import LaurentPoly
from lenscontact.services.casson_service import casson_service

router = typer.Typer(help="Alexander polynomials and the Casson-Walker parity obstruction", no_args_is_help=True)

PolyOpt = Annotated[
    str, typer.Option("--poly", help="Alexander polynomial, e.g. 't^-1 - 1 + t' or '{\"-1\": 1, \"0\": -1, \"1\": 1}'")
]
HalfOpt = Annotated[int, typer.Option("--half-dd", help="Delta''(1)/2 of the knot")]
SurgeryOpt = Annotated[int, typer.Option("-n", help="Surgery coefficient")]


def _poly(text: str) -> LaurentPoly:
    if text.lstrip().startswith("{"):
        try:
            mapping = orjson.loads(text)
        except orjson.JSONDecodeError as exc:
            raise PolynomialSyntaxError(f"invalid JSON polynomial: {exc}", text=text)
        if not isinstance(mapping, dict):
            raise PolynomialSyntaxError("JSON polynomial must be an object", text=text)
        return casson_service.parse_polynomial(mapping)
    return casson_service.parse_polynomial(text)


@router.command("parse")
def parse(poly: PolyOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Parse a Laurent polynomial into exponent/coefficient pairs."""
    parsed = _poly(poly)
    terms = sorted(parsed.coeffs.items())
    emit("casson parse", {"poly": poly}, {"coeffs": dict(terms)},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["exponent", "coefficient"], rows=[list(t) for t in terms], text=parsed.render())


@router.command("a2")
def a2(poly: PolyOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Delta''(1)/2 of a symmetric Alexander polynomial."""
    value = casson_service.half_second_derivative(_poly(poly))
    emit("casson a2", {"poly": poly}, {"half_dd": value, "odd": value % 2 == 1},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(value))


@router.command("delta")
def delta(half_dd: HalfOpt, n: SurgeryOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
          envelope: EnvelopeOpt = False):
    """Casson-Walker difference between n-surgeries on the knot and on the unknot."""
    value = casson_service.casson_surgery_delta(half_dd, n)
    emit("casson delta", {"half_dd": half_dd, "n": n}, {"delta": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("parity")
def parity(half_dd: HalfOpt, n: SurgeryOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
           envelope: EnvelopeOpt = False):
    """Whether half_dd outside 2nZ rules out an L(|n|,1) summand."""
    result = casson_service.parity_obstruction(half_dd, n)
    emit("casson parity", {"half_dd": half_dd, "n": n}, {"obstructed": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result).lower())


@router.command("arf")
def arf(
    half_dd: HalfOpt,
    tb_bar: Annotated[int, typer.Option("--tb-bar", help="Maximal tb, negative")],
    n: SurgeryOpt,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Negative-tb cases left after the parity obstruction."""
    cases = [c.value for c in casson_service.tb_negative_arf_verdict(half_dd, tb_bar, n)]
    emit("casson arf", {"half_dd": half_dd, "tb_bar": tb_bar, "n": n}, {"cases": cases},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["case"], rows=[[c] for c in cases], text=" ".join(cases))
