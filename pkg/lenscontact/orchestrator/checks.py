"""
Finite verifications run by `sweep`. Each check turns a bound into an ordered
list of cases and a module-level worker that maps one case to certificate rows,
so cases can be shipped to a process pool.
"""
from fractions import Fraction
from itertools import product
from math import gcd, isqrt, prod
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from lenscontact.core.serialization import format_rational
from lenscontact.models.schemas import LensSpace, Verdict
from lenscontact.services.contfrac_service import contfrac_service
from lenscontact.services.obstruct_service import obstruct_service
from lenscontact.services.tight_service import tight_service
from lenscontact.services.tridiag_service import tridiag_service

Row = Dict[str, object]


class SweepCheck(NamedTuple):
    cases: Callable[[int], List[tuple]]
    run: Callable[[tuple], List[Row]]
    default_pmax: Optional[int]
    description: str


# ── case generators ────────────────────────────────────────────────────────
def _pairs(pmax: int) -> List[tuple]:
    return [(p, q) for p in range(2, pmax + 1) for q in range(1, p) if gcd(p, q) == 1]


def _pairs_all_large(pmax: int, min_n: int) -> List[tuple]:
    keep = []
    for p, q in _pairs(pmax):
        coeffs = contfrac_service.expand(LensSpace(p=p, q=q)).coeffs
        if len(coeffs) >= min_n and max(coeffs) <= -3:
            keep.append((p, q))
    return keep


def _pairs_with_two(pmax: int) -> List[tuple]:
    keep = []
    for p, q in _pairs(pmax):
        coeffs = contfrac_service.expand(LensSpace(p=p, q=q)).coeffs
        if len(coeffs) >= 3 and -2 in coeffs:
            keep.append((p, q))
    return keep


def _expand(case: tuple):
    return contfrac_service.expand(LensSpace(p=case[0], q=case[1]))


# ── workers ────────────────────────────────────────────────────────────────
def check_apq_oracle(case: tuple) -> List[Row]:
    cf = _expand(case)
    closed = tridiag_service.apq_closed_form(cf)
    oracle = tridiag_service.apq_oracle(cf)
    det = tridiag_service.determinant(tridiag_service.linking_matrix(cf))
    ok = (
        closed == oracle
        and closed.is_symmetric()
        and all(x > 0 for row in closed.rows for x in row)
        and det == (-1) ** cf.n * cf.p
    )
    return [{"p": cf.p, "q": cf.q, "n": cf.n, "pass": ok}]


def check_f_recurrence(case: tuple) -> List[Row]:
    cf = _expand(case)
    direct = tight_service.f_direct(cf)
    recursive = tight_service.f_recursive(cf.p, cf.q)
    ok = direct == recursive
    if cf.n == 2:
        ok = ok and tight_service.f_n2_closed_form(cf.p, cf.q) == direct
    return [{"p": cf.p, "q": cf.q, "f": direct, "pass": ok}]


def check_d3_bound(case: tuple) -> List[Row]:
    cf = _expand(case)
    lowest = tight_service.d3_values(cf)[0][0]
    f = tight_service.f_direct(cf)
    ok = lowest >= tight_service.d3_lower_bound(cf) and f <= cf.p * (cf.p - cf.n - 1)
    return [{"p": cf.p, "q": cf.q, "min_d3": format_rational(lowest), "pass": ok}]


def check_xican_min(case: tuple) -> List[Row]:
    cf = _expand(case)
    can = tight_service.xi_can(cf)
    expected = {can.rvec, tight_service.conjugate(can).rvec}
    found = {s.rvec for s in tight_service.minimizers(cf, cap=100000)}
    return [{"p": cf.p, "q": cf.q, "minimizers": len(found), "pass": found == expected}]


def check_count_bound(case: tuple) -> List[Row]:
    cf = _expand(case)
    count = tight_service.count(cf)
    bound = tight_service.count_upper_bound(cf)
    tight = cf.n <= 2 or cf.p == cf.q + 1
    ok = count <= bound and (count == bound) == tight
    return [{"p": cf.p, "q": cf.q, "count": count, "bound": format_rational(bound), "pass": ok}]


def check_lp2_diophantine(case: tuple) -> List[Row]:
    (p,) = case
    rotations = obstruct_service.rotation_numbers(LensSpace(p=p, q=2))
    limit = (p - 3) // 2

    def solvable(r: int) -> bool:
        s = isqrt((r * r + p) // 2)
        return 2 * s * s == r * r + p and s <= limit

    ok = all(solvable(r) for r in rotations) and (not rotations or p % 8 in (1, 7))
    if p == 7:
        ok = ok and rotations == [-1, 1]
    return [{"p": p, "rotation_numbers": rotations, "pass": ok}]


def check_triple(case: tuple) -> List[Row]:
    cf = contfrac_service.from_coeffs(case)
    can = tight_service.d3(cf, tight_service.xi_can(cf))
    ok = -(4 * can + 1) < Fraction(cf.p, 4) - Fraction(5, 2)
    return [{"coeffs": list(case), "p": cf.p, "q": cf.q, "d3_can": format_rational(can), "pass": ok}]


def _p_bound_rows(case: tuple, bound: Callable[[int, int], bool]) -> List[Row]:
    space = LensSpace(p=case[0], q=case[1])
    profile = obstruct_service.profile(space)
    n = len(profile.coeffs)
    rows = []
    for tau in range(1, space.p):
        report = obstruct_service.summand_feasible(space, -tau, profile=profile)
        t = obstruct_service.normalized_t(tau)
        ok = report.verdict == Verdict.RULED_OUT or bound(space.p, t, n)
        rows.append({"p": space.p, "q": space.q, "n": n, "tau": tau, "t": t,
                     "verdict": report.verdict.value, "pass": ok})
    return rows


def check_p_bound_ai_2(case: tuple) -> List[Row]:
    return _p_bound_rows(case, lambda p, t, n: p <= 2 * t - n and (n != 3 or p < 2 * t - 3))


def check_p_bound_ai_large(case: tuple) -> List[Row]:
    return _p_bound_rows(case, lambda p, t, n: p <= 2 * t - 4)


def check_thm_main(case: tuple) -> List[Row]:
    space = LensSpace(p=case[0], q=case[1])
    profile = obstruct_service.profile(space)
    survivors = [
        tb_bar for tb_bar in range(0, space.p + 1)
        if obstruct_service.summand_feasible(space, tb_bar, profile=profile).verdict == Verdict.NOT_RULED_OUT
    ]
    return [{"p": space.p, "q": space.q, "survivors": survivors, "pass": not survivors}]


def check_small_lens(case: tuple) -> List[Row]:
    space = LensSpace(p=case[0], q=case[1])
    profile = obstruct_service.profile(space)
    survivors = [
        tb_bar for tb_bar in range(1 - space.p, space.p)
        if obstruct_service.summand_feasible(space, tb_bar, use_literature=True, profile=profile).verdict
        == Verdict.NOT_RULED_OUT
    ]
    exempt = space.q == 1 or (space.p, space.q) == (7, 2)
    return [{"p": space.p, "q": space.q, "survivors": survivors, "pass": exempt or not survivors}]


def check_det_product(case: tuple) -> List[Row]:
    cf = _expand(case)
    matrix = tridiag_service.apq_closed_form(cf)
    weights = [abs(a) - 1 for a in cf.coeffs]
    ok = all(
        matrix[i, j] < Fraction(cf.p, prod(weights[i:j + 1]))
        for i in range(cf.n) for j in range(i, cf.n)
    )
    return [{"p": cf.p, "q": cf.q, "n": cf.n, "pass": ok}]


def check_r_bound(case: tuple) -> List[Row]:
    space = LensSpace(p=case[0], q=case[1])
    rotations = obstruct_service.rotation_numbers(space)
    ok = all(2 * abs(r) <= space.p - 6 for r in rotations)
    return [{"p": space.p, "q": space.q, "max_r": max(rotations, default=None), "pass": ok}]


def check_lp3(case: tuple) -> List[Row]:
    (p,) = case
    ok = obstruct_service.lp3_diophantine(p) and obstruct_service.lp3_pair_check(p)
    return [{"p": p, "pass": ok}]


def check_f_bound_ai_large(case: tuple) -> List[Row]:
    cf = _expand(case)
    can = tight_service.d3(cf, tight_service.xi_can(cf))
    floor = -Fraction(sum(abs(a) - 1 for a in cf.coeffs) + 2 * cf.n - 4, 4)
    return [{"p": cf.p, "q": cf.q, "d3_can": format_rational(can), "pass": can > floor}]


def check_large_negative(case: tuple) -> List[Row]:
    (p,) = case
    rows = []
    for tau in range(1, p):
        t = obstruct_service.normalized_t(tau)
        if p < 2 * t - 3:
            continue
        survivors = [s for s in obstruct_service.candidate_summands(p, -tau, use_literature=True) if s.q != 1]
        allowed = obstruct_service.large_negative_verdict(tau, p)
        ok = set(survivors) <= set(allowed)
        rows.append({"p": p, "tau": tau, "survivors": [s.label for s in survivors], "pass": ok})
    return rows


def _triples(_: int) -> List[tuple]:
    return [
        c for c in product(range(-3, -8, -1), repeat=3)
        if max(c) == -3 and abs(c[0]) <= abs(c[2])
    ]


# ── registry ───────────────────────────────────────────────────────────────
CHECKS: Dict[str, SweepCheck] = {
    "apq-oracle": SweepCheck(_pairs, check_apq_oracle, 200, "closed-form A_pq equals -p M^-1"),
    "f-recurrence": SweepCheck(_pairs, check_f_recurrence, 200, "f from the matrix equals f from the recurrence"),
    "d3-bound": SweepCheck(_pairs, check_d3_bound, 150, "d3 >= (-p+2n-1)/4 and f/p <= p-n-1"),
    "xican-min": SweepCheck(_pairs, check_xican_min, 100, "d3 is minimized exactly by xi_can and its conjugate"),
    "count-bound": SweepCheck(_pairs, check_count_bound, 200, "structure count bound and its equality cases"),
    "lp2-diophantine": SweepCheck(
        lambda pmax: [(p,) for p in range(3, pmax + 1, 2)], check_lp2_diophantine, 201,
        "rotation numbers of L(p,2) solve r^2 + p = 2s^2",
    ),
    "35-triples": SweepCheck(_triples, check_triple, None, "the 35 length-3 expansions with min |a_i| = 3"),
    "p-bound-ai-2": SweepCheck(_pairs_with_two, check_p_bound_ai_2, 150, "surviving summands with some a_i = -2"),
    "p-bound-ai-large": SweepCheck(
        lambda pmax: _pairs_all_large(pmax, 3), check_p_bound_ai_large, 150,
        "surviving summands with every a_i <= -3",
    ),
    "thm-main": SweepCheck(_pairs, check_thm_main, 100, "no summand survives when tb_bar >= 0"),
    "small-lens": SweepCheck(
        lambda pmax: [(s.p, s.q) for p in range(2, pmax + 1) for s in contfrac_service.lens_spaces(p, True)],
        check_small_lens, 10, "only L(p,1) and L(7,2) survive for p <= 10",
    ),
    "det-product": SweepCheck(
        lambda pmax: _pairs_all_large(pmax, 2), check_det_product, 150, "A_pq entries against p / prod(|a_k|-1)",
    ),
    "r-bound": SweepCheck(
        lambda pmax: _pairs_all_large(pmax, 3), check_r_bound, 150, "|r| <= (p-6)/2 when every a_i <= -3",
    ),
    "lp3-diophantine": SweepCheck(
        lambda pmax: [(p,) for p in range(5, pmax + 1) if p % 3 == 2], check_lp3, 150,
        "rotation numbers of L(3a-1,3)",
    ),
    "f-bound-ai-large": SweepCheck(
        lambda pmax: _pairs_all_large(pmax, 2), check_f_bound_ai_large, 150, "d3(xi_can) lower bound when every a_i <= -3",
    ),
    "large-negative": SweepCheck(
        lambda pmax: [(p,) for p in range(2, pmax + 1)], check_large_negative, 40,
        "only L(p,1), and L(7,4) at tau = 6, survive once p >= 2t-3",
    ),
}


def run_case(task: Tuple[str, tuple]) -> List[Row]:
    name, case = task
    return CHECKS[name].run(case)
