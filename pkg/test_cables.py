import random
from math import gcd

import pytest

from lenscontact.core.errors import InvalidCableError, InvalidFrontError, OutOfScopeError
from lenscontact.models.schemas import CableParams, FrontStats
from lenscontact.services.cables_service import cables_service


@pytest.mark.parametrize(
    "p,q,tb_bar,expected",
    [
        (3, 2, 1, (6, 6)),
        (2, -3, -1, (-6, -6)),
        (2, 7, 1, (9, 14)),
        (2, 1, -1, (-1, 2)),
    ],
)
def test_cable_tb_bounds(p, q, tb_bar, expected):
    assert cables_service.cable_tb_bounds(CableParams(p=p, q=q), tb_bar) == expected


def test_cable_tb_bounds_rejects_q_minus_one():
    with pytest.raises(OutOfScopeError):
        cables_service.cable_tb_bounds(CableParams(p=3, q=-1), 1)


def test_cable_tb_bounds_interval():
    for p in range(2, 8):
        for q in range(-20, 21):
            if gcd(p, q) != 1 or q == -1:
                continue
            for tb_bar in range(-5, 6):
                lower, upper = cables_service.cable_tb_bounds(CableParams(p=p, q=q), tb_bar)
                assert lower <= upper
                assert (lower == upper) == (q < p * tb_bar)


def test_cable_params_normalization():
    assert CableParams(p=-3, q=-2) == CableParams(p=3, q=2)
    for p, q in [(1, 5), (4, 2), (-1, 3), (0, 1)]:
        with pytest.raises(InvalidCableError):
            CableParams(p=p, q=q)


def test_front_validation():
    assert FrontStats(writhe=3, cusps=4).tb == 1
    for cusps in (0, 3, -2):
        with pytest.raises(InvalidFrontError):
            FrontStats(writhe=0, cusps=cusps)


def test_p_copy_front():
    front = cables_service.p_copy_front(FrontStats(writhe=0, cusps=2), 2)
    assert (front.writhe, front.cusps, front.tb) == (-2, 4, -4)
    front = cables_service.p_copy_front(FrontStats(writhe=3, cusps=4), 3)
    assert (front.writhe, front.cusps, front.tb) == (15, 12, 9)


def test_p_copy_multiplies_tb_by_p_squared():
    rng = random.Random(20240611)
    for _ in range(1000):
        front = FrontStats(writhe=rng.randint(-50, 50), cusps=2 * rng.randint(1, 30))
        p = rng.randint(2, 20)
        assert cables_service.p_copy_front(front, p).tb == p * p * front.tb


def test_twist_adjust():
    front = FrontStats(writhe=-2, cusps=4)
    twisted = cables_service.twist_adjust(front, 2, -1)
    assert (twisted.writhe, twisted.cusps, twisted.tb) == (-3, 6, -6)
    assert cables_service.twist_adjust(front, 2, 0) == front
    assert cables_service.twist_adjust(FrontStats(writhe=0, cusps=2), 3, 1).tb == 1


def test_p_copy_then_negative_twists_realizes_pq():
    for p in range(2, 7):
        for tb_bar in range(-3, 4):
            for q in range(p * tb_bar - 12, p * tb_bar):
                if gcd(p, q) != 1:
                    continue
                front = FrontStats(writhe=tb_bar + 1, cusps=2)
                copied = cables_service.p_copy_front(front, p)
                twisted = cables_service.twist_adjust(copied, p, -(p * tb_bar - q))
                assert twisted.tb == p * q


def test_cable_genus():
    assert cables_service.cable_genus(CableParams(p=3, q=2), 1) == 4
    assert cables_service.cable_genus(CableParams(p=2, q=7), 1) == 5
    assert cables_service.cable_genus(CableParams(p=5, q=1), 0) == 0
    with pytest.raises(InvalidCableError):
        cables_service.cable_genus(CableParams(p=2, q=-3), 1)


def test_cable_identity_holds_on_its_domain():
    for p in range(2, 9):
        for g in range(0, 5):
            for q in range(max(1, p * (2 * g - 1)), p * (2 * g - 1) + 25):
                if gcd(p, q) == 1:
                    assert cables_service.cable_identity_check(CableParams(p=p, q=q), g)
    with pytest.raises(OutOfScopeError):
        cables_service.cable_identity_check(CableParams(p=3, q=2), 1)


def test_bennequin_upper():
    assert cables_service.bennequin_upper(0) == -1
    assert cables_service.bennequin_upper(4) == 7


def test_cable_tower():
    steps = cables_service.cable_tower([CableParams(p=2, q=3), CableParams(p=3, q=2)])
    assert [(s.genus, s.tb_lower, s.tb_upper) for s in steps] == [(1, 1, 1), (4, 6, 6)]
    assert all(s.exact for s in steps)

    (torus,) = cables_service.cable_tower([CableParams(p=2, q=5)])
    assert (torus.genus, torus.tb_lower, torus.tb_upper) == (2, 3, 3)

    steps = cables_service.cable_tower([CableParams(p=2, q=3), CableParams(p=2, q=13)])
    assert (steps[-1].genus, steps[-1].tb_lower, steps[-1].tb_upper) == (8, 15, 15)


def test_cable_tower_with_negative_cables():
    (step,) = cables_service.cable_tower([CableParams(p=2, q=-3)])
    assert (step.genus, step.tb_lower, step.tb_upper) == (1, -6, -6)

    steps = cables_service.cable_tower([CableParams(p=2, q=3), CableParams(p=2, q=-5)])
    assert [(s.genus, s.tb_lower, s.tb_upper) for s in steps] == [(1, 1, 1), (4, -10, -10)]

    steps = cables_service.cable_tower([CableParams(p=2, q=-3), CableParams(p=3, q=2)])
    assert [(s.genus, s.tb_lower, s.tb_upper) for s in steps] == [(1, -6, -6), (4, -14, 6)]


def test_cable_tower_matches_single_cable_bounds():
    for p in range(2, 7):
        for q in range(-15, 16):
            if gcd(p, q) != 1 or q == -1:
                continue
            (step,) = cables_service.cable_tower([CableParams(p=p, q=q)])
            lower, upper = cables_service.cable_tb_bounds(CableParams(p=p, q=q), -1)
            assert step.tb_lower == lower
            assert step.tb_upper <= upper
