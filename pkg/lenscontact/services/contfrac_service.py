"""
Negative continued fractions of -p/q, the tridiagonal determinant d(.), and
the homeomorphism classes of lens spaces they index.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import List, Sequence

from lenscontact.core.errors import InvalidCoefficientError
from lenscontact.models.schemas import ContinuedFraction, LensSpace

logger = logging.getLogger(__name__)


# ── helper ─────────────────────────────────────────────────────────────────
def _check_coeffs(coeffs: Sequence[int], allow_empty: bool = False) -> None:
    if not coeffs and not allow_empty:
        raise InvalidCoefficientError("empty continued fraction")
    for i, a in enumerate(coeffs, start=1):
        if a > -2:
            raise InvalidCoefficientError(f"a{i} = {a} is above -2", index=i, value=a, coeffs=list(coeffs))


class ContfracService:

    # ════════════════════════════════════════════════════════
    # EXPANSION
    # ════════════════════════════════════════════════════════
    def expand(self, space: LensSpace) -> ContinuedFraction:
        coeffs: List[int] = []
        num, den = space.p, space.q
        while den:
            ceiling = -(-num // den)
            coeffs.append(-ceiling)
            num, den = den, ceiling * den - num
        logger.debug(f"{space.label} -> {coeffs}")
        return ContinuedFraction(coeffs=tuple(coeffs), p=space.p, q=space.q)

    def evaluate(self, coeffs: Sequence[int]) -> Fraction:
        _check_coeffs(coeffs)
        value = Fraction(coeffs[-1])
        for a in reversed(coeffs[:-1]):
            value = a - 1 / value
        return value

    def from_coeffs(self, coeffs: Sequence[int]) -> ContinuedFraction:
        value = self.evaluate(coeffs)
        return ContinuedFraction(coeffs=tuple(coeffs), p=-value.numerator, q=value.denominator)

    def reverse(self, cf: ContinuedFraction) -> ContinuedFraction:
        flipped = tuple(reversed(cf.coeffs))
        return ContinuedFraction(coeffs=flipped, p=cf.p, q=self.det_d(flipped[1:]))

    # ════════════════════════════════════════════════════════
    # DETERMINANTS
    # ════════════════════════════════════════════════════════
    def det_d(self, coeffs: Sequence[int]) -> int:
        """d() = 1, d(b1) = |b1|, d(b1..bk) = |b1| d(b2..bk) - d(b3..bk)"""
        _check_coeffs(coeffs, allow_empty=True)
        current, previous = 1, 0
        for b in reversed(coeffs):
            current, previous = abs(b) * current - previous, current
        return current

    def tail_determinants(self, coeffs: Sequence[int]) -> List[int]:
        """[d(a[k:]) for k in 0..n]; the last entry is d() = 1"""
        _check_coeffs(coeffs, allow_empty=True)
        tails = [1]
        current, previous = 1, 0
        for b in reversed(coeffs):
            current, previous = abs(b) * current - previous, current
            tails.append(current)
        tails.reverse()
        return tails

    # ════════════════════════════════════════════════════════
    # HOMEOMORPHISM CLASSES
    # ════════════════════════════════════════════════════════
    def inverse_partner(self, space: LensSpace) -> LensSpace:
        return LensSpace(p=space.p, q=pow(space.q, -1, space.p))

    def canonical(self, space: LensSpace) -> LensSpace:
        partner = self.inverse_partner(space)
        return space if space.q <= partner.q else partner

    def homeomorphic(self, first: LensSpace, second: LensSpace) -> bool:
        return self.canonical(first) == self.canonical(second)

    def lens_spaces(self, p: int, canonical_only: bool = False) -> List[LensSpace]:
        spaces = [LensSpace(p=p, q=q) for q in range(1, p) if gcd(p, q) == 1]
        if canonical_only:
            spaces = [s for s in spaces if self.canonical(s) == s]
        return spaces


contfrac_service = ContfracService()
