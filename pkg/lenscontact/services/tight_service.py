"""
Tight contact structures on L(p,q): enumeration by rotation vectors, the d3
invariant, and the closed forms and bounds it satisfies.
"""
import logging
from collections import Counter
from fractions import Fraction
from itertools import product
from math import prod
from typing import List, Optional, Tuple

from lenscontact.core.config import settings
from lenscontact.core.errors import (
    CapacityExceededError,
    InternalConsistencyError,
    InvalidStructureError,
    OutOfScopeError,
)
from lenscontact.models.schemas import ContinuedFraction, LensSpace, TightStructure
from lenscontact.services.contfrac_service import contfrac_service
from lenscontact.services.tridiag_service import tridiag_service

logger = logging.getLogger(__name__)


class TightService:

    # ════════════════════════════════════════════════════════
    # ENUMERATION
    # ════════════════════════════════════════════════════════
    def count(self, cf: ContinuedFraction) -> int:
        return prod(abs(a) - 1 for a in cf.coeffs)

    def enumerate(self, cf: ContinuedFraction, cap: Optional[int] = None) -> List[TightStructure]:
        cap = settings.MAX_STRUCTURES if cap is None else cap
        total = self.count(cf)
        if total > cap:
            raise CapacityExceededError(total, cap)
        ranges = [range(a + 2, -a - 1, 2) for a in cf.coeffs]
        return [TightStructure(coeffs=cf.coeffs, rvec=rvec) for rvec in product(*ranges)]

    def xi_can(self, cf: ContinuedFraction) -> TightStructure:
        return TightStructure(coeffs=cf.coeffs, rvec=tuple(-a - 2 for a in cf.coeffs))

    def conjugate(self, structure: TightStructure) -> TightStructure:
        return TightStructure(coeffs=structure.coeffs, rvec=tuple(-r for r in structure.rvec))

    def self_conjugate(self, cf: ContinuedFraction) -> Optional[TightStructure]:
        """The zero vector, which exists exactly when every a_i is even"""
        if any(a % 2 for a in cf.coeffs):
            return None
        return TightStructure(coeffs=cf.coeffs, rvec=(0,) * cf.n)

    # ════════════════════════════════════════════════════════
    # d3
    # ════════════════════════════════════════════════════════
    def d3(self, cf: ContinuedFraction, structure: TightStructure) -> Fraction:
        if structure.coeffs != cf.coeffs:
            raise InvalidStructureError(
                "structure belongs to a different expansion",
                coeffs=list(cf.coeffs), structure_coeffs=list(structure.coeffs),
            )
        form = tridiag_service.quadratic_form(tridiag_service.apq_closed_form(cf), structure.rvec)
        return (Fraction(-form, cf.p) + cf.n - 2) / 4

    def d3_values(self, cf: ContinuedFraction, cap: Optional[int] = None) -> List[Tuple[Fraction, int]]:
        """Distinct d3 values in ascending order with multiplicities"""
        tally = Counter(self.d3(cf, s) for s in self.enumerate(cf, cap))
        return sorted(tally.items())

    def minimizers(self, cf: ContinuedFraction, cap: Optional[int] = None) -> List[TightStructure]:
        structures = self.enumerate(cf, cap)
        values = [self.d3(cf, s) for s in structures]
        lowest = min(values)
        return [s for s, v in zip(structures, values) if v == lowest]

    # ════════════════════════════════════════════════════════
    # CLOSED FORMS AND BOUNDS
    # ════════════════════════════════════════════════════════
    def f_direct(self, cf: ContinuedFraction) -> int:
        return tridiag_service.quadratic_form(tridiag_service.apq_closed_form(cf), self.xi_can(cf).rvec)

    def f_recursive(self, p: int, q: int) -> int:
        space = LensSpace(p=p, q=q)
        total = Fraction(0)
        num, den = space.p, space.q
        while den != 1:
            total += Fraction((num - den - 1) ** 2, num * den)
            num, den = den, -(-num // den) * den - num
        total += Fraction((num - 2) ** 2, num)
        value = total * space.p
        if value.denominator != 1:
            raise InternalConsistencyError(f"f({p}/{q}) = {value} is not an integer", p=p, q=q)
        return value.numerator

    def f_n2_closed_form(self, p: int, q: int) -> int:
        cf = contfrac_service.expand(LensSpace(p=p, q=q))
        if cf.n != 2:
            raise OutOfScopeError(f"closed form needs a length-2 expansion, got {list(cf.coeffs)}", p=p, q=q)
        value = Fraction((cf.p - cf.q - 1) ** 2 + cf.p * (cf.q - 2) ** 2, cf.q)
        if value.denominator != 1:
            raise InternalConsistencyError(f"f({p}/{q}) = {value} is not an integer", p=p, q=q)
        return value.numerator

    def count_upper_bound(self, cf: ContinuedFraction) -> Fraction:
        m = min(abs(a) for a in cf.coeffs)
        return Fraction(m - 1, m) * (cf.p - (cf.n - 1) * (m - 1) ** (cf.n - 1))

    def d3_lower_bound(self, cf: ContinuedFraction) -> Fraction:
        return Fraction(-cf.p + 2 * cf.n - 1, 4)


tight_service = TightService()
