from fractions import Fraction
from math import gcd

import pytest

from lenscontact.core.errors import InternalConsistencyError, InvalidRotationError, OutOfScopeError
from lenscontact.models.schemas import (
    FeasibilityReport,
    LegendrianClass,
    LensSpace,
    NegativeTbCase,
    Reason,
    Verdict,
)
from lenscontact.services.obstruct_service import obstruct_service


def L(p, q):
    return LensSpace(p=p, q=q)


# ── d3 of surgeries ────────────────────────────────────────────────────────
def test_d3_from_surgery():
    assert obstruct_service.d3_from_surgery(7, 1) == Fraction(-2, 7)
    assert obstruct_service.d3_from_surgery(2, 0) == Fraction(-1, 4)
    with pytest.raises(InvalidRotationError):
        obstruct_service.d3_from_surgery(7, 2)
    with pytest.raises(OutOfScopeError):
        obstruct_service.d3_from_surgery(1, 1)


def test_d3_connected_sum():
    assert obstruct_service.d3_connected_sum(Fraction(-1, 4), Fraction(-1, 4)) == 0
    assert obstruct_service.d3_connected_sum(Fraction(-2, 7), Fraction(1, 7)) == Fraction(5, 14)


def test_reducible_d3_ceiling():
    assert obstruct_service.reducible_d3_ceiling(7) == -2


# ── rotation numbers ───────────────────────────────────────────────────────
@pytest.mark.parametrize(
    "p,q,expected",
    [
        (7, 2, [-1, 1]),
        (7, 4, [-1, 1]),
        (5, 2, []),
        (5, 1, [-3, -1, 1, 3]),
        (8, 3, [0]),
        (9, 2, [-3, 3]),
        (11, 3, [-3, -1, 1, 3]),
        (15, 4, [-5, -3, -1, 1, 3, 5]),
        (26, 3, [-12, -4, -2, 2, 4, 12]),
    ],
)
def test_rotation_numbers(p, q, expected):
    assert obstruct_service.rotation_numbers(L(p, q)) == expected


def test_rotation_numbers_lp2_empty_off_plus_minus_one_mod_eight():
    for p in range(3, 62, 2):
        if p % 8 not in (1, 7):
            assert obstruct_service.rotation_numbers(L(p, 2)) == []


def test_rotation_numbers_agree_with_surgery_d3():
    for p in range(2, 25):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            rotations = obstruct_service.rotation_numbers(L(p, q))
            assert rotations == sorted(rotations)
            assert rotations == [-r for r in reversed(rotations)]
            assert all((r - p) % 2 == 0 for r in rotations)


def test_l4k3_rotation_numbers_are_realized():
    for p in range(7, 32, 4):
        predicted = obstruct_service.l4k3_rotation_numbers(p)
        assert set(predicted) <= set(obstruct_service.rotation_numbers(L(p, 4)))
    assert obstruct_service.l4k3_rotation_numbers(11) == [-3, -1, 1, 3]
    with pytest.raises(OutOfScopeError):
        obstruct_service.l4k3_rotation_numbers(9)


def test_lp3_checks():
    for p in (11, 23, 26):
        assert obstruct_service.lp3_diophantine(p)
        assert obstruct_service.lp3_pair_check(p)
    with pytest.raises(OutOfScopeError):
        obstruct_service.lp3_pair_check(10)


# ── stabilization ──────────────────────────────────────────────────────────
def test_stabilization_set():
    assert obstruct_service.stabilization_set(LegendrianClass(tb=-5, r=0), -6) == [-1, 1]
    assert obstruct_service.stabilization_set(LegendrianClass(tb=0, r=1), -3) == [-2, 0, 2, 4]
    assert obstruct_service.stabilization_set(LegendrianClass(tb=2, r=1), 2) == [1]
    with pytest.raises(OutOfScopeError):
        obstruct_service.stabilization_set(LegendrianClass(tb=-5, r=0), -4)


def test_legendrian_parity():
    with pytest.raises(InvalidRotationError):
        LegendrianClass(tb=-5, r=1)


# ── feasibility ────────────────────────────────────────────────────────────
def test_l72_survives_at_tb_minus_five():
    report = obstruct_service.summand_feasible(L(7, 2), -5)
    assert report.verdict == Verdict.NOT_RULED_OUT
    witness = next(r.witness for r in report.reasons if r.rule == "STABILIZATIONS_COVERED")
    assert witness["r0"] == 0
    assert witness["required"] == [-1, 1]
    assert not report.literature_facts_used


def test_l72_ruled_out_at_tb_minus_four():
    report = obstruct_service.summand_feasible(L(7, 2), -4)
    assert report.verdict == Verdict.RULED_OUT
    assert [r.rule for r in report.reasons] == ["STABILIZATIONS_NOT_COVERED"]


def test_feasibility_precondition():
    with pytest.raises(OutOfScopeError):
        obstruct_service.summand_feasible(L(7, 2), -7)


def test_large_d3_is_reported():
    report = obstruct_service.summand_feasible(L(7, 3), -3)
    assert report.verdict == Verdict.RULED_OUT
    assert "D3_CAN_ABOVE_QUARTER" in [r.rule for r in report.reasons]


def test_empty_rotation_set_is_reported():
    report = obstruct_service.summand_feasible(L(5, 2), -3)
    assert report.verdict == Verdict.RULED_OUT
    assert "NO_ROTATION_NUMBERS" in [r.rule for r in report.reasons]


def test_nonnegative_tb_bar_always_ruled_out():
    for p in range(2, 26):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            profile = obstruct_service.profile(L(p, q))
            for tb_bar in range(0, 4):
                report = obstruct_service.summand_feasible(L(p, q), tb_bar, profile=profile)
                assert report.verdict == Verdict.RULED_OUT


def test_literature_facts():
    report = obstruct_service.summand_feasible(L(7, 2), -5, use_literature=True)
    assert report.verdict == Verdict.RULED_OUT
    assert report.literature_facts_used
    assert [r.rule for r in report.reasons if r.literature] == ["L4K3_SYMPLECTIC_HOMOLOGY"]

    report = obstruct_service.summand_feasible(L(7, 2), -6, use_literature=True)
    assert report.verdict == Verdict.NOT_RULED_OUT
    assert not report.literature_facts_used

    assert obstruct_service.summand_feasible(L(9, 2), -8).verdict == Verdict.NOT_RULED_OUT
    report = obstruct_service.summand_feasible(L(9, 2), -8, use_literature=True)
    assert report.verdict == Verdict.RULED_OUT
    assert [r.rule for r in report.reasons if r.literature] == ["L92_STEIN_FILLINGS"]
    assert obstruct_service.summand_feasible(L(9, 5), -8, use_literature=True).verdict == Verdict.RULED_OUT


def test_candidate_summands():
    assert obstruct_service.candidate_summands(7, -6, use_literature=True) == [L(7, 1), L(7, 2)]
    assert obstruct_service.candidate_summands(7, -5, use_literature=True) == [L(7, 1)]
    assert obstruct_service.candidate_summands(7, -5) == [L(7, 1), L(7, 2)]
    assert obstruct_service.candidate_summands(7, 0) == []


def test_report_consistency_is_enforced():
    with pytest.raises(InternalConsistencyError):
        FeasibilityReport(p=7, q=2, tb_bar=-5, verdict=Verdict.RULED_OUT, reasons=[])
    with pytest.raises(InternalConsistencyError):
        FeasibilityReport(
            p=7, q=2, tb_bar=-5, verdict=Verdict.NOT_RULED_OUT,
            reasons=[Reason(rule="STABILIZATIONS_COVERED", rules_out=False, witness={})],
        )


# ── negative tb_bar ────────────────────────────────────────────────────────
def test_normalized_t():
    assert obstruct_service.normalized_t(5) == 5
    assert obstruct_service.normalized_t(6) == 5
    with pytest.raises(OutOfScopeError):
        obstruct_service.normalized_t(0)


@pytest.mark.parametrize(
    "tb_bar,n,expected",
    [
        (-6, -7, [NegativeTbCase.LP1, NegativeTbCase.L74_SPECIAL]),
        (-1, -2, [NegativeTbCase.LP1]),
        (-10, -11, [NegativeTbCase.LP1, NegativeTbCase.GENERAL_BOUND]),
        (-10, -15, [NegativeTbCase.LP1]),
    ],
)
def test_classify_negative_tb(tb_bar, n, expected):
    assert obstruct_service.classify_negative_tb(tb_bar, n) == expected


@pytest.mark.parametrize("tb_bar,n", [(-3, -3), (1, -2), (-2, -1)])
def test_classify_negative_tb_rejects(tb_bar, n):
    with pytest.raises(OutOfScopeError):
        obstruct_service.classify_negative_tb(tb_bar, n)


def test_large_negative_verdict():
    assert obstruct_service.large_negative_verdict(6, 7) == [L(7, 2)]
    assert obstruct_service.large_negative_verdict(5, 7) == []
    assert obstruct_service.large_negative_verdict(3, 10) == []
    with pytest.raises(OutOfScopeError):
        obstruct_service.large_negative_verdict(9, 10)
    with pytest.raises(OutOfScopeError):
        obstruct_service.large_negative_verdict(3, 3)


def test_self_linking_obstruction():
    assert obstruct_service.self_linking_obstruction(L(7, 2), 0, 1)
    assert not obstruct_service.self_linking_obstruction(L(7, 2), -2, 1)
    with pytest.raises(InvalidRotationError):
        obstruct_service.self_linking_obstruction(L(7, 2), 0, 2)
    with pytest.raises(OutOfScopeError):
        obstruct_service.self_linking_obstruction(L(7, 2), -7, 0)


def test_self_linking_obstruction_does_not_depend_on_q():
    for p in range(2, 30):
        for space in [L(p, q) for q in range(1, p) if gcd(p, q) == 1]:
            for tb in range(1 - p, 3):
                for r in (-3, -1, 0, 1, 2):
                    if (tb + r) % 2 == 0:
                        continue
                    assert obstruct_service.self_linking_obstruction(space, tb, r) == (tb + abs(r) >= 1)


def test_mirror_value_never_changes_the_covering_verdict():
    for p in range(2, 26):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            rotations = obstruct_service.rotation_numbers(L(p, q))
            allowed = set(rotations)
            for tb_bar in range(1 - p, p + 1):
                k = p - 1 + tb_bar
                found = obstruct_service.covering_witness(rotations, p, tb_bar) is not None
                stabilizations_only = bool(allowed) and any(
                    set(range(r0 - k, r0 + k + 1, 2)) <= allowed
                    for r0 in range((tb_bar + 1) % 2, max(allowed) - k + 1, 2)
                )
                assert found == stabilizations_only
                if tb_bar >= 0 and allowed:
                    alternative = any(
                        set(range(r0 - k, r0 + k + 1, 2)) | {-r0 - (p - tb_bar - 1)} <= allowed
                        for r0 in range((tb_bar + 1) % 2, max(allowed) - k + 1, 2)
                    )
                    assert found == alternative
