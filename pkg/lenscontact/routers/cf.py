from typing import Annotated

import typer

from lenscontact.dependencies.options import (
    CoeffsOpt, CsvOpt, EnvelopeOpt, JsonOpt, POpt, QOpt, emit, lens, parse_ints,
)
from lenscontact.services.contfrac_service import contfrac_service

router = typer.Typer(help="Negative continued fractions and lens space classes", no_args_is_help=True)


@router.command("expand")
def expand(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Expand -p/q as [a1, ..., an] with every ai <= -2."""
    cf = contfrac_service.expand(lens(p, q))
    emit("cf expand", {"p": p, "q": q}, {"p": cf.p, "q": cf.q, "coeffs": list(cf.coeffs)},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=" ".join(map(str, cf.coeffs)))


@router.command("eval")
def evaluate(coeffs: CoeffsOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Evaluate a negative continued fraction exactly."""
    values = parse_ints(coeffs)
    value = contfrac_service.evaluate(values)
    emit("cf eval", {"coeffs": values}, {"value": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(value))


@router.command("det")
def det(coeffs: CoeffsOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Tridiagonal determinant d(a1, ..., ak)."""
    values = parse_ints(coeffs)
    result = contfrac_service.det_d(values)
    emit("cf det", {"coeffs": values}, {"d": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result))


@router.command("reverse")
def reverse(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Reverse the expansion of -p/q, giving -p/q' with qq' = 1 mod p."""
    cf = contfrac_service.reverse(contfrac_service.expand(lens(p, q)))
    emit("cf reverse", {"p": p, "q": q}, {"p": cf.p, "q": cf.q, "coeffs": list(cf.coeffs)},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=" ".join(map(str, cf.coeffs)))


@router.command("partner")
def partner(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """L(p,q') with qq' = 1 mod p."""
    other = contfrac_service.inverse_partner(lens(p, q))
    emit("cf partner", {"p": p, "q": q}, {"p": other.p, "q": other.q},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=other.label)


@router.command("canonical")
def canonical(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Representative of the homeomorphism class with the smaller q."""
    space = contfrac_service.canonical(lens(p, q))
    emit("cf canonical", {"p": p, "q": q}, {"p": space.p, "q": space.q},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=space.label)


@router.command("homeo")
def homeo(
    p: POpt,
    q: QOpt,
    other_q: Annotated[int, typer.Option("--other-q", help="q of the second lens space")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Whether L(p,q) and L(p,other_q) are orientation-preservingly homeomorphic."""
    result = contfrac_service.homeomorphic(lens(p, q), lens(p, other_q))
    emit("cf homeo", {"p": p, "q": q, "other_q": other_q}, {"homeomorphic": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result).lower())


@router.command("list")
def list_spaces(
    p: POpt,
    canonical_only: Annotated[bool, typer.Option("--canonical", help="One representative per class")] = False,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """All lens spaces L(p,q) for a fixed p."""
    spaces = contfrac_service.lens_spaces(p, canonical_only)
    rows = [[s.p, s.q, list(contfrac_service.expand(s).coeffs)] for s in spaces]
    emit("cf list", {"p": p, "canonical": canonical_only},
         {"spaces": [{"p": s.p, "q": s.q} for s in spaces]},
         json_out=json_out, csv_out=csv_out, envelope=envelope, columns=["p", "q", "coeffs"], rows=rows)
