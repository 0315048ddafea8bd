"""
Obstructions to a lens space appearing as a summand of a reducible Legendrian
surgery: d3 of surgeries on the unknot, rotation numbers, the stabilization
counting argument, and the case split for negative tb_bar.
"""
import logging
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Sequence

from lenscontact.core.errors import InvalidRotationError, OutOfScopeError
from lenscontact.models.schemas import (
    FeasibilityReport,
    LegendrianClass,
    LensSpace,
    NegativeTbCase,
    Reason,
    SummandProfile,
    Verdict,
)
from lenscontact.services import literature
from lenscontact.services.contfrac_service import contfrac_service
from lenscontact.services.tight_service import tight_service

logger = logging.getLogger(__name__)


def _is_square(value: int) -> bool:
    return value >= 0 and isqrt(value) ** 2 == value


class ObstructService:

    # ════════════════════════════════════════════════════════
    # d3 OF SURGERIES
    # ════════════════════════════════════════════════════════
    def d3_from_surgery(self, p: int, r: int) -> Fraction:
        """d3 of Legendrian surgery on an unknot with tb = 1-p and rotation r"""
        if p < 2:
            raise OutOfScopeError(f"surgery coefficient -{p} must be at most -2", p=p)
        if (r - p) % 2:
            raise InvalidRotationError(f"rotation {r} must have the parity of p = {p}", p=p, r=r)
        return Fraction(-(r * r + p), 4 * p)

    def d3_connected_sum(self, first: Fraction, second: Fraction) -> Fraction:
        return Fraction(first) + Fraction(second) + Fraction(1, 2)

    def reducible_d3_ceiling(self, p: int) -> Fraction:
        return Fraction(-(p + 1), 4)

    def rotation_numbers(self, space: LensSpace, cap: Optional[int] = None) -> List[int]:
        found = set()
        for d3, _ in tight_service.d3_values(contfrac_service.expand(space), cap):
            target = -space.p * (4 * d3 + 1)
            if target.denominator != 1 or not _is_square(target.numerator):
                continue
            r = isqrt(target.numerator)
            if (r - space.p) % 2 == 0:
                found.update((r, -r))
        return sorted(found)

    def stabilization_set(self, start: LegendrianClass, target_tb: int) -> List[int]:
        k = start.tb - target_tb
        if k < 0:
            raise OutOfScopeError(f"cannot stabilize from tb = {start.tb} up to {target_tb}",
                                  tb=start.tb, target_tb=target_tb)
        return list(range(start.r - k, start.r + k + 1, 2))

    # ════════════════════════════════════════════════════════
    # FEASIBILITY
    # ════════════════════════════════════════════════════════
    def profile(self, space: LensSpace, cap: Optional[int] = None) -> SummandProfile:
        cf = contfrac_service.expand(space)
        return SummandProfile(
            space=space,
            coeffs=cf.coeffs,
            d3_can=tight_service.d3(cf, tight_service.xi_can(cf)),
            rotation_numbers=tuple(self.rotation_numbers(space, cap)),
        )

    def covering_witness(self, rotation_numbers: Sequence[int], p: int, tb_bar: int) -> Optional[Dict]:
        """Smallest r0 >= 0 whose stabilizations down to tb = 1-p, plus the
        mirror value -r0-k, all lie among the rotation numbers"""
        if not rotation_numbers:
            return None
        allowed = set(rotation_numbers)
        k = p - 1 + tb_bar
        for r0 in range((tb_bar + 1) % 2, max(allowed) - k + 1, 2):
            required = set(self.stabilization_set(LegendrianClass(tb=tb_bar, r=r0), 1 - p))
            # R = -R and r0 + k is required, so -r0 - k adds no constraint; likewise
            # -r0 - (p - tb_bar - 1) for tb_bar >= 0, whose negative is a stabilization
            required.add(-r0 - k)
            if required <= allowed:
                return {"r0": r0, "k": k, "required": sorted(required)}
        return None

    def summand_feasible(
        self,
        space: LensSpace,
        tb_bar: int,
        use_literature: bool = False,
        cap: Optional[int] = None,
        profile: Optional[SummandProfile] = None,
    ) -> FeasibilityReport:
        if space.p < 1 - tb_bar:
            raise OutOfScopeError(
                f"surgery slope -{space.p} must be at most tb_bar - 1 = {tb_bar - 1}",
                p=space.p, q=space.q, tb_bar=tb_bar,
            )
        profile = profile or self.profile(space, cap)
        reasons: List[Reason] = []

        if profile.d3_can > Fraction(-1, 4):
            reasons.append(Reason(rule="D3_CAN_ABOVE_QUARTER", witness={"d3_can": profile.d3_can}))

        if not profile.rotation_numbers:
            reasons.append(Reason(rule="NO_ROTATION_NUMBERS", witness={"rotation_numbers": []}))
        else:
            witness = self.covering_witness(profile.rotation_numbers, space.p, tb_bar)
            if witness is None:
                reasons.append(Reason(
                    rule="STABILIZATIONS_NOT_COVERED",
                    witness={"k": space.p - 1 + tb_bar, "rotation_numbers": list(profile.rotation_numbers)},
                ))
            else:
                witness["branch"] = "tb_bar_nonnegative" if tb_bar >= 0 else "tb_bar_negative"
                reasons.append(Reason(rule="STABILIZATIONS_COVERED", rules_out=False, witness=witness))

        if use_literature:
            for fact in literature.matching_facts(space, tb_bar):
                reasons.append(Reason(
                    rule=fact.rule,
                    literature=True,
                    citation=fact.citation,
                    witness={"fact": fact.description},
                ))

        verdict = Verdict.RULED_OUT if any(r.rules_out for r in reasons) else Verdict.NOT_RULED_OUT
        logger.info(f"{space.label} tb_bar={tb_bar}: {verdict.value}")
        return FeasibilityReport(
            p=space.p,
            q=space.q,
            tb_bar=tb_bar,
            verdict=verdict,
            reasons=reasons,
            literature_facts_used=any(r.literature for r in reasons),
        )

    def candidate_summands(
        self, p: int, tb_bar: int, use_literature: bool = False, cap: Optional[int] = None
    ) -> List[LensSpace]:
        survivors = []
        for space in contfrac_service.lens_spaces(p, canonical_only=True):
            report = self.summand_feasible(space, tb_bar, use_literature, cap)
            if report.verdict == Verdict.NOT_RULED_OUT:
                survivors.append(space)
        return survivors

    def self_linking_obstruction(self, space: LensSpace, tb: int, r: int) -> bool:
        """True when a representative with these (tb, r) cannot produce the summand.

        Once tb + |r| >= 1 the verdict no longer depends on q: every tight
        structure has d3 >= (-p+2n-1)/4, which exceeds the ceiling -(p+1)/4
        for any n >= 1.
        """
        LegendrianClass(tb=tb, r=r)
        if space.p < 1 - tb:
            raise OutOfScopeError(f"-{space.p} must be at most tb - 1 = {tb - 1}", p=space.p, tb=tb)
        return tb + abs(r) >= 1

    # ════════════════════════════════════════════════════════
    # NEGATIVE tb_bar
    # ════════════════════════════════════════════════════════
    def normalized_t(self, tau: int) -> int:
        if tau < 1:
            raise OutOfScopeError(f"tau = {tau} must be positive", tau=tau)
        return literature.normalized_t(tau)

    def classify_negative_tb(self, tb_bar: int, n: int) -> List[NegativeTbCase]:
        if not n < tb_bar < 0:
            raise OutOfScopeError(f"need n < tb_bar < 0, got n = {n}, tb_bar = {tb_bar}", tb_bar=tb_bar, n=n)
        cases = [NegativeTbCase.LP1]
        if (tb_bar, n) == (-6, -7):
            cases.append(NegativeTbCase.L74_SPECIAL)
        if n >= 4 * (tb_bar // 2) + 6:
            cases.append(NegativeTbCase.GENERAL_BOUND)
        return cases

    def large_negative_verdict(self, tau: int, p: int) -> List[LensSpace]:
        """Canonical L(p,q), q > 1, that can still be summands at tb_bar = -tau"""
        t = self.normalized_t(tau)
        if p <= tau:
            raise OutOfScopeError(f"need p > tau, got p = {p}, tau = {tau}", p=p, tau=tau)
        if p < 2 * t - 3:
            raise OutOfScopeError(f"no prediction below p = 2t-3 = {2 * t - 3}", p=p, tau=tau)
        if (tau, p) == (6, 7):
            return [LensSpace(p=7, q=2)]
        return []

    # ════════════════════════════════════════════════════════
    # ROTATION NUMBER FAMILIES
    # ════════════════════════════════════════════════════════
    def lp3_pair_check(self, p: int) -> bool:
        """Two rotation numbers of L(p,3) differing by 2 lie in {±1, ±(s±1)}, s^2 = (p+1)/3"""
        if p < 5 or p % 3 != 2:
            raise OutOfScopeError(f"needs p = 3a-1 >= 5, got {p}", p=p)
        rotations = set(self.rotation_numbers(LensSpace(p=p, q=3)))
        allowed = {1, -1}
        if (p + 1) % 3 == 0 and _is_square((p + 1) // 3):
            s = isqrt((p + 1) // 3)
            allowed.update((s - 1, s + 1, 1 - s, -1 - s))
        return all(r in allowed and r + 2 in allowed for r in rotations if r + 2 in rotations)

    def lp3_diophantine(self, p: int) -> bool:
        """Every rotation number r of L(p,3) makes 3r^2 + 2p a square"""
        if p < 5 or p % 3 != 2:
            raise OutOfScopeError(f"needs p = 3a-1 >= 5, got {p}", p=p)
        return all(_is_square(3 * r * r + 2 * p) for r in self.rotation_numbers(LensSpace(p=p, q=3)))

    def l4k3_rotation_numbers(self, p: int) -> List[int]:
        """Rotation numbers of L(4k+3, 4) realized by stabilized torus knots: odd |r| <= (p-5)/2"""
        if p < 7 or p % 4 != 3:
            raise OutOfScopeError(f"needs p = 4k+3 >= 7, got {p}", p=p)
        bound = (p - 5) // 2
        return list(range(-bound, bound + 1, 2))


obstruct_service = ObstructService()
