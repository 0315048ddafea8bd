"""
`rot`, `feasible`, `classify-tb` and `candidates` are registered at the top
level by main; the rest live under `obstruct`.
"""
from typing import Annotated

import typer

from lenscontact.core.serialization import format_rational, parse_rational
from lenscontact.dependencies.options import CapOpt, CsvOpt, EnvelopeOpt, JsonOpt, POpt, QOpt, emit, lens
from lenscontact.models.schemas import LegendrianClass
from lenscontact.services.obstruct_service import obstruct_service

router = typer.Typer(help="d3 of surgeries, stabilizations and the negative-tb case analysis", no_args_is_help=True)

TbBarOpt = Annotated[int, typer.Option("--tb-bar", help="Maximal Thurston-Bennequin number of the knot")]
LiteratureOpt = Annotated[
    bool, typer.Option("--literature/--no-literature", help="Also consult fillings and symplectic homology results")
]


# ════════════════════════════════════════════════════════
# TOP-LEVEL COMMANDS
# ════════════════════════════════════════════════════════
def rot(p: POpt, q: QOpt, cap: CapOpt = None, json_out: JsonOpt = False, csv_out: CsvOpt = False,
        envelope: EnvelopeOpt = False):
    """Rotation numbers r of tb = 1-p unknots whose Legendrian surgery gives a tight L(p,q)."""
    rotations = obstruct_service.rotation_numbers(lens(p, q), cap)
    emit("rot", {"p": p, "q": q, "cap": cap}, {"rotation_numbers": rotations},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["r"], rows=[[r] for r in rotations], text=" ".join(map(str, rotations)))


def feasible(
    p: POpt,
    q: QOpt,
    tb_bar: TbBarOpt,
    literature: LiteratureOpt = False,
    cap: CapOpt = None,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Decide whether L(p,q) can be a summand of a reducible surgery on a knot with this tb_bar."""
    report = obstruct_service.summand_feasible(lens(p, q), tb_bar, literature, cap)
    rows = [[r.rule, r.rules_out, r.witness, r.citation] for r in report.reasons]
    emit("feasible", {"p": p, "q": q, "tb_bar": tb_bar, "literature": literature, "cap": cap},
         report.model_dump(mode="python"),
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["rule", "rules_out", "witness", "citation"],
         rows=rows + [["verdict", None, report.verdict.value, None]])


def classify_tb(
    tb_bar: TbBarOpt,
    n: Annotated[int, typer.Option("-n", help="Surgery coefficient, below tb_bar")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Which cases a reducible n-surgery with n < tb_bar < 0 must fall into."""
    cases = [c.value for c in obstruct_service.classify_negative_tb(tb_bar, n)]
    emit("classify-tb", {"tb_bar": tb_bar, "n": n}, {"cases": cases},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["case"], rows=[[c] for c in cases], text=" ".join(cases))


def candidates(
    p: POpt,
    tb_bar: TbBarOpt,
    literature: LiteratureOpt = False,
    cap: CapOpt = None,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Lens spaces L(p,q), up to homeomorphism, not ruled out as summands."""
    spaces = obstruct_service.candidate_summands(p, tb_bar, literature, cap)
    emit("candidates", {"p": p, "tb_bar": tb_bar, "literature": literature, "cap": cap},
         {"candidates": [{"p": s.p, "q": s.q} for s in spaces]},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["p", "q"], rows=[[s.p, s.q] for s in spaces], text=" ".join(s.label for s in spaces))


# ════════════════════════════════════════════════════════
# obstruct GROUP
# ════════════════════════════════════════════════════════
@router.command("d3")
def d3(
    p: POpt,
    r: Annotated[int, typer.Option("-r", help="Rotation number, same parity as p")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """d3 = -(r^2+p)/(4p) of Legendrian surgery on a tb = 1-p unknot."""
    value = obstruct_service.d3_from_surgery(p, r)
    emit("obstruct d3", {"p": p, "r": r}, {"d3": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("sum")
def connected_sum(
    first: Annotated[str, typer.Option("--d1", help="d3 of the first summand, e.g. -2/7")],
    second: Annotated[str, typer.Option("--d2", help="d3 of the second summand")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """d3 of a contact connected sum, d1 + d2 + 1/2."""
    value = obstruct_service.d3_connected_sum(parse_rational(first), parse_rational(second))
    emit("obstruct sum", {"d1": first, "d2": second}, {"d3": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("stab")
def stab(
    tb: Annotated[int, typer.Option("--tb", help="Starting tb")],
    r: Annotated[int, typer.Option("-r", help="Starting rotation number")],
    target: Annotated[int, typer.Option("--target-tb", help="tb after stabilizing")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Rotation numbers reachable by stabilizing (tb, r) down to the target tb."""
    values = obstruct_service.stabilization_set(LegendrianClass(tb=tb, r=r), target)
    emit("obstruct stab", {"tb": tb, "r": r, "target_tb": target}, {"rotation_numbers": values},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["r"], rows=[[v] for v in values], text=" ".join(map(str, values)))


@router.command("ceiling")
def ceiling(p: POpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """-(p+1)/4, a d3 value some structure induced by a tb_bar >= 0 surgery stays below."""
    value = obstruct_service.reducible_d3_ceiling(p)
    emit("obstruct ceiling", {"p": p}, {"d3": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=format_rational(value))


@router.command("self-linking")
def self_linking(
    p: POpt,
    q: QOpt,
    tb: Annotated[int, typer.Option("--tb", help="tb of a representative")],
    r: Annotated[int, typer.Option("-r", help="Rotation number of the representative")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Whether a representative with tb + |r| >= 1 already rules out the summand."""
    result = obstruct_service.self_linking_obstruction(lens(p, q), tb, r)
    emit("obstruct self-linking", {"p": p, "q": q, "tb": tb, "r": r}, {"obstructed": result},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(result).lower())


@router.command("t")
def normalized_t(
    tau: Annotated[int, typer.Option("--tau", help="-tb_bar, positive")],
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """t = tau for odd tau, tau-1 for even tau."""
    value = obstruct_service.normalized_t(tau)
    emit("obstruct t", {"tau": tau}, {"t": value},
         json_out=json_out, csv_out=csv_out, envelope=envelope, text=str(value))


@router.command("large-negative")
def large_negative(
    tau: Annotated[int, typer.Option("--tau", help="-tb_bar, positive")],
    p: POpt,
    json_out: JsonOpt = False,
    csv_out: CsvOpt = False,
    envelope: EnvelopeOpt = False,
):
    """Lens spaces other than L(p,1) that may survive once p >= 2t-3."""
    spaces = obstruct_service.large_negative_verdict(tau, p)
    emit("obstruct large-negative", {"tau": tau, "p": p}, {"survivors": [{"p": s.p, "q": s.q} for s in spaces]},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["p", "q"], rows=[[s.p, s.q] for s in spaces], text=" ".join(s.label for s in spaces))


@router.command("lp3")
def lp3(p: POpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Arithmetic constraints on rotation numbers of L(3a-1, 3)."""
    emit("obstruct lp3", {"p": p},
         {"diophantine": obstruct_service.lp3_diophantine(p), "pairs": obstruct_service.lp3_pair_check(p)},
         json_out=json_out, csv_out=csv_out, envelope=envelope)


@router.command("l4k3")
def l4k3(p: POpt, json_out: JsonOpt = False, csv_out: CsvOpt = False, envelope: EnvelopeOpt = False):
    """Rotation numbers of L(4k+3, 4) coming from stabilized torus knots."""
    values = obstruct_service.l4k3_rotation_numbers(p)
    emit("obstruct l4k3", {"p": p}, {"rotation_numbers": values},
         json_out=json_out, csv_out=csv_out, envelope=envelope,
         columns=["r"], rows=[[v] for v in values], text=" ".join(map(str, values)))
