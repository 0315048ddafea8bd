from typing import Annotated, List

import typer

from lenscontact.dependencies.options import CsvOpt, EnvelopeOpt, JsonOpt, emit, parse_ints
from lenscontact.core.errors import InvalidCableError
from lenscontact.models.schemas import CableParams, FrontStats
from lenscontact.services.cables_service import cables_service

router = typer.Typer(help="Cables: tb bounds, p-copy fronts and Seifert genus", no_args_is_help=True)

CableP = Annotated[int, typer.Option("-p", help="Longitudinal winding of the cable")]
CableQ = Annotated[int, typer.Option("-q", help="Meridional winding of the cable")]
WritheOpt = Annotated[int, typer.Option("--writhe", help="Writhe of the front")]
CuspsOpt = Annotated[int, typer.Option("--cusps", help="Number of cusps of the front")]
GenusOpt = Annotated[int, typer.Option("--genus", help="Seifert genus of the companion")]


def _front_payload(front: FrontStats) -> dict:
    return {"writhe": front.writhe, "cusps": front.cusps, "tb": front.tb}


@router.command("tb")
def tb(
    p: CableP,
    q: CableQ,
    tb_bar: Annotated[int, typer.Option("--tb-bar", help="Maximal tb of the companion")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Interval containing the maximal tb of the (p,q) cable."""
    lower, upper = cables_service.cable_tb_bounds(CableParams(p=p, q=q), tb_bar)
    emit("cable tb", {"p": p, "q": q, "tb_bar": tb_bar}, {"lower": lower, "upper": upper},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=f"{lower} {upper}")


@router.command("pcopy")
def pcopy(
    writhe: WritheOpt,
    cusps: CuspsOpt,
    p: CableP,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Writhe, cusps and tb of the p-copy of a front."""
    front = cables_service.p_copy_front(FrontStats(writhe=writhe, cusps=cusps), p)
    emit("cable pcopy", {"writhe": writhe, "cusps": cusps, "p": p}, _front_payload(front),
         json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("twist")
def twist(
    writhe: WritheOpt,
    cusps: CuspsOpt,
    p: CableP,
    delta: Annotated[int, typer.Option("--delta", help="Signed number of 1/p twists")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Add 1/p twists to a p-copy front."""
    front = cables_service.twist_adjust(FrontStats(writhe=writhe, cusps=cusps), p, delta)
    emit("cable twist", {"writhe": writhe, "cusps": cusps, "p": p, "delta": delta}, _front_payload(front),
         json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("genus")
def genus(p: CableP, q: CableQ, g: GenusOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
          envelope: EnvelopeOpt = False):
    """Seifert genus p*g + (p-1)(q-1)/2 of the cable."""
    value = cables_service.cable_genus(CableParams(p=p, q=q), g)
    emit("cable genus", {"p": p, "q": q, "genus": g}, {"genus": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(value))


@router.command("identity")
def identity(p: CableP, q: CableQ, g: GenusOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False,
             envelope: EnvelopeOpt = False):
    """Check 2g(cable) - 1 = pq - (q - p(2g-1)) when q/p >= 2g-1."""
    result = cables_service.cable_identity_check(CableParams(p=p, q=q), g)
    emit("cable identity", {"p": p, "q": q, "genus": g}, {"holds": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result).lower())


@router.command("bennequin")
def bennequin(g: GenusOpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Bennequin bound tb <= 2g - 1."""
    value = cables_service.bennequin_upper(g)
    emit("cable bennequin", {"genus": g}, {"upper": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(value))


@router.command("tower")
def tower(
    layer: Annotated[List[str], typer.Option("--layer", help="Cable parameters 'p,q', innermost first; repeatable")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Iterated cables of the unknot with genus and tb interval at each layer."""
    layers = []
    for text in layer:
        values = parse_ints(text, "layer")
        if len(values) != 2:
            raise InvalidCableError(f"--layer needs 'p,q', got '{text}'", layer=text)
        layers.append(CableParams(p=values[0], q=values[1]))
    steps = cables_service.cable_tower(layers)
    emit("cable tower", {"layers": layer}, {"steps": [s.model_dump() for s in steps]},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["p", "q", "genus", "tb_lower", "tb_upper"],
         rows=[[s.p, s.q, s.genus, s.tb_lower, s.tb_upper] for s in steps])
