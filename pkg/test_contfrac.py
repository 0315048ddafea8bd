from fractions import Fraction
from math import gcd

import pytest

from lenscontact.core.errors import InvalidCoefficientError, InvalidLensSpaceError, NonCoprimeError
from lenscontact.models.schemas import LensSpace
from lenscontact.services.contfrac_service import contfrac_service


@pytest.mark.parametrize(
    "p,q,coeffs",
    [
        (7, 2, [-4, -2]),
        (7, 4, [-2, -4]),
        (7, 3, [-3, -2, -2]),
        (55, 21, [-3, -3, -3, -3]),
        (8, 3, [-3, -3]),
        (11, 4, [-3, -4]),
        (9, 1, [-9]),
        (6, 5, [-2, -2, -2, -2, -2]),
    ],
)
def test_expand_known_values(p, q, coeffs):
    cf = contfrac_service.expand(LensSpace(p=p, q=q))
    assert list(cf.coeffs) == coeffs
    assert (cf.p, cf.q) == (p, q)


def test_expand_evaluates_back_exactly():
    for p in range(2, 61):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = contfrac_service.expand(LensSpace(p=p, q=q))
            assert contfrac_service.evaluate(cf.coeffs) == Fraction(-p, q)
            assert all(a <= -2 for a in cf.coeffs)


def test_evaluate():
    assert contfrac_service.evaluate([-4, -2]) == Fraction(-7, 2)
    assert contfrac_service.evaluate([-2, -2, -2]) == Fraction(-4, 3)
    assert contfrac_service.evaluate([-5]) == -5


@pytest.mark.parametrize("coeffs", [[], [-1], [-3, 0], [2, -2]])
def test_evaluate_rejects_bad_coefficients(coeffs):
    with pytest.raises(InvalidCoefficientError) as info:
        contfrac_service.evaluate(coeffs)
    assert info.value.exit_code == 2


def test_det_d_base_cases_and_recursion():
    assert contfrac_service.det_d([]) == 1
    assert contfrac_service.det_d([-5]) == 5
    assert contfrac_service.det_d([-4, -2]) == 7
    assert contfrac_service.det_d([-3, -3, -3, -3]) == 55
    assert contfrac_service.det_d([-2] * 9) == 10


def test_det_d_recovers_p_and_q():
    for p in range(2, 41):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            coeffs = contfrac_service.expand(LensSpace(p=p, q=q)).coeffs
            assert contfrac_service.det_d(coeffs) == p
            assert contfrac_service.det_d(coeffs[1:]) == q


def test_tail_determinants():
    assert contfrac_service.tail_determinants([-3, -2, -2]) == [7, 3, 2, 1]


def test_reverse_gives_inverse_q():
    cf = contfrac_service.reverse(contfrac_service.expand(LensSpace(p=7, q=2)))
    assert list(cf.coeffs) == [-2, -4]
    assert cf.q == 4
    for p in range(2, 41):
        for q in range(1, p):
            if gcd(p, q) == 1:
                rev = contfrac_service.reverse(contfrac_service.expand(LensSpace(p=p, q=q)))
                assert (rev.q * q) % p == 1 % p


def test_lens_space_validation():
    assert LensSpace(p=7, q=9).q == 2
    with pytest.raises(NonCoprimeError):
        LensSpace(p=6, q=4)
    with pytest.raises(InvalidLensSpaceError) as info:
        LensSpace(p=7, q=0)
    assert not isinstance(info.value, NonCoprimeError)
    with pytest.raises(InvalidLensSpaceError):
        LensSpace(p=1, q=1)


def test_homeomorphism_classes():
    assert contfrac_service.inverse_partner(LensSpace(p=7, q=2)) == LensSpace(p=7, q=4)
    assert contfrac_service.canonical(LensSpace(p=7, q=4)) == LensSpace(p=7, q=2)
    assert contfrac_service.homeomorphic(LensSpace(p=7, q=3), LensSpace(p=7, q=5))
    assert not contfrac_service.homeomorphic(LensSpace(p=7, q=2), LensSpace(p=7, q=3))
    assert [s.q for s in contfrac_service.lens_spaces(7, canonical_only=True)] == [1, 2, 3, 6]
    assert [s.q for s in contfrac_service.lens_spaces(8)] == [1, 3, 5, 7]


def test_numerator_recursion():
    for p in range(3, 301):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = contfrac_service.expand(LensSpace(p=p, q=q))
            if cf.n < 2:
                continue
            tail = contfrac_service.from_coeffs(cf.coeffs[1:])
            assert tail.p == q
            assert p == abs(cf.coeffs[0]) * q - tail.q


def test_leading_coefficient_at_most_minus_three_forces_p_above_2q():
    for p in range(2, 501):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = contfrac_service.expand(LensSpace(p=p, q=q))
            if cf.coeffs[0] <= -3:
                assert p >= 2 * q + 1


def test_p_minus_q_lower_bound():
    for p in range(2, 301):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = contfrac_service.expand(LensSpace(p=p, q=q))
            m = min(abs(a) for a in cf.coeffs)
            assert p - q >= (m - 1) ** cf.n
            equality = cf.n == 1 or all(a == -2 for a in cf.coeffs)
            assert (p - q == (m - 1) ** cf.n) == equality
