from typing import Annotated, Optional

import typer

from lenscontact.core.serialization import format_rational
from lenscontact.dependencies.options import (
    CapOpt, CsvOpt, EnvelopeOpt, JsonOpt, POpt, QOpt, emit, lens, parse_ints,
)
from lenscontact.models.schemas import TightStructure
from lenscontact.services.contfrac_service import contfrac_service
from lenscontact.services.tight_service import tight_service

router = typer.Typer(help="Tight contact structures on L(p,q) and their d3 invariants", no_args_is_help=True)

RvecOpt = Annotated[str, typer.Option("--rvec", help="Rotation vector, e.g. '2,0'")]


def _expand(p: int, q: int):
    return contfrac_service.expand(lens(p, q))


@router.command("count")
def count(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Number of tight structures, prod(|ai| - 1)."""
    result = tight_service.count(_expand(p, q))
    emit("tight count", {"p": p, "q": q}, {"count": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result))


@router.command("list")
def list_structures(
    p: POpt,
    q: QOpt,
    cap: CapOpt = None,
    fold: Annotated[bool, typer.Option("--fold", help="Show one structure per conjugate pair")] = False,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Every tight structure with its d3, in lexicographic rotation-vector order."""
    cf = _expand(p, q)
    structures = tight_service.enumerate(cf, cap)
    if fold:
        structures = [s for s in structures if s.rvec >= tight_service.conjugate(s).rvec]
    entries = [{"rvec": list(s.rvec), "d3": tight_service.d3(cf, s)} for s in structures]
    emit("tight list", {"p": p, "q": q, "cap": cap, "fold": fold}, {"structures": entries},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["rvec", "d3"], rows=[[e["rvec"], e["d3"]] for e in entries])


@router.command("xican")
def xican(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Rotation vector of the canonical structure, r_i = |ai| - 2."""
    structure = tight_service.xi_can(_expand(p, q))
    emit("tight xican", {"p": p, "q": q}, {"rvec": list(structure.rvec)},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=" ".join(map(str, structure.rvec)))


@router.command("conj")
def conj(p: POpt, q: QOpt, rvec: RvecOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
         envelope: EnvelopeOpt = False):
    """Conjugate structure, -r."""
    cf = _expand(p, q)
    structure = tight_service.conjugate(TightStructure(coeffs=cf.coeffs, rvec=tuple(parse_ints(rvec, "rvec"))))
    emit("tight conj", {"p": p, "q": q, "rvec": rvec}, {"rvec": list(structure.rvec)},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=" ".join(map(str, structure.rvec)))


@router.command("selfconj")
def selfconj(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """The self-conjugate structure, present only when every ai is even."""
    cf = _expand(p, q)
    structure = tight_service.self_conjugate(cf)
    payload = {"rvec": list(structure.rvec) if structure else None,
               "d3": tight_service.d3(cf, structure) if structure else None}
    emit("tight selfconj", {"p": p, "q": q}, payload, json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("d3")
def d3(p: POpt, q: QOpt, rvec: RvecOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
       envelope: EnvelopeOpt = False):
    """d3 of the structure with the given rotation vector."""
    cf = _expand(p, q)
    value = tight_service.d3(cf, TightStructure(coeffs=cf.coeffs, rvec=tuple(parse_ints(rvec, "rvec"))))
    emit("tight d3", {"p": p, "q": q, "rvec": rvec}, {"d3": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("d3can")
def d3can(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """d3 of the canonical structure, the minimum over all tight structures."""
    cf = _expand(p, q)
    value = tight_service.d3(cf, tight_service.xi_can(cf))
    emit("tight d3can", {"p": p, "q": q}, {"d3": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("spectrum")
def spectrum(p: POpt, q: QOpt, cap: CapOpt = None, json_out: JsonOpt = False, csv_out: CsvOpt = False,
             envelope: EnvelopeOpt = False):
    """Distinct d3 values with multiplicities."""
    values = tight_service.d3_values(_expand(p, q), cap)
    emit("tight spectrum", {"p": p, "q": q, "cap": cap},
         {"values": [{"d3": v, "count": c} for v, c in values]},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["d3", "count"], rows=[[v, c] for v, c in values])


@router.command("f")
def f(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """f(p/q) = r^T A r for the canonical rotation vector."""
    result = tight_service.f_direct(_expand(p, q))
    emit("tight f", {"p": p, "q": q}, {"f": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result))


@router.command("frec")
def frec(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """f(p/q) from the Euclidean recurrence."""
    result = tight_service.f_recursive(p, q)
    emit("tight frec", {"p": p, "q": q}, {"f": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result))


@router.command("fcheck")
def fcheck(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Compare f from the matrix, the recurrence and (for n = 2) the closed form."""
    cf = _expand(p, q)
    direct = tight_service.f_direct(cf)
    recursive = tight_service.f_recursive(cf.p, cf.q)
    closed: Optional[int] = tight_service.f_n2_closed_form(cf.p, cf.q) if cf.n == 2 else None
    agree = direct == recursive and closed in (None, direct)
    emit("tight fcheck", {"p": p, "q": q},
         {"f_direct": direct, "f_recursive": recursive, "f_closed_form": closed, "agree": agree},
         json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("count-bound")
def count_bound(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
                envelope: EnvelopeOpt = False):
    """Upper bound (m-1)/m (p - (n-1)(m-1)^(n-1)) on the number of structures."""
    cf = _expand(p, q)
    emit("tight count-bound", {"p": p, "q": q},
         {"count": tight_service.count(cf), "bound": tight_service.count_upper_bound(cf)},
         json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("d3-bound")
def d3_bound(p: POpt, q: QOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Lower bound (-p+2n-1)/4 on d3 of any tight structure."""
    cf = _expand(p, q)
    value = tight_service.d3_lower_bound(cf)
    emit("tight d3-bound", {"p": p, "q": q}, {"d3_lower_bound": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))
