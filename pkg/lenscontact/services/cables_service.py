"""
Thurston-Bennequin bounds for cables, front-diagram bookkeeping for the p-copy
construction, and Seifert genera of cables.
"""
import logging
from typing import List, Sequence, Tuple

from lenscontact.core.errors import InternalConsistencyError, InvalidCableError, OutOfScopeError
from lenscontact.models.schemas import CableParams, FrontStats, TowerStep

logger = logging.getLogger(__name__)


class CablesService:

    # ════════════════════════════════════════════════════════
    # tb BOUNDS
    # ════════════════════════════════════════════════════════
    def cable_tb_bounds(self, cable: CableParams, tb_bar_companion: int) -> Tuple[int, int]:
        if cable.q == -1:
            raise OutOfScopeError("the bound fails for q = -1", p=cable.p, q=cable.q)
        pq = cable.p * cable.q
        slope = cable.p * tb_bar_companion
        if cable.q < slope:
            return pq, pq
        return pq - (cable.q - slope), pq

    def bennequin_upper(self, genus: int) -> int:
        if genus < 0:
            raise InvalidCableError(f"genus {genus} must be nonnegative", genus=genus)
        return 2 * genus - 1

    # ════════════════════════════════════════════════════════
    # FRONTS
    # ════════════════════════════════════════════════════════
    def p_copy_front(self, front: FrontStats, p: int) -> FrontStats:
        if p < 2:
            raise InvalidCableError(f"p-copy needs p >= 2, got {p}", p=p)
        return FrontStats(
            writhe=p * p * front.writhe - p * (p - 1) * front.cusps // 2,
            cusps=p * front.cusps,
        )

    def twist_adjust(self, front: FrontStats, p: int, delta_twists: int) -> FrontStats:
        if p < 2:
            raise InvalidCableError(f"twists need p >= 2, got {p}", p=p)
        if delta_twists < 0:
            count = -delta_twists
            return FrontStats(writhe=front.writhe - count * (p - 1), cusps=front.cusps + 2 * count)
        return FrontStats(writhe=front.writhe + delta_twists * (p - 1), cusps=front.cusps)

    # ════════════════════════════════════════════════════════
    # GENUS
    # ════════════════════════════════════════════════════════
    def cable_genus(self, cable: CableParams, g_companion: int) -> int:
        if cable.q <= 0:
            raise InvalidCableError(f"genus formula needs q > 0, got {cable.q}", p=cable.p, q=cable.q)
        if g_companion < 0:
            raise InvalidCableError(f"genus {g_companion} must be nonnegative", genus=g_companion)
        twisted = (cable.p - 1) * (cable.q - 1)
        if twisted % 2:
            raise InternalConsistencyError("(p-1)(q-1) is odd", p=cable.p, q=cable.q)
        return cable.p * g_companion + twisted // 2

    def cable_identity_check(self, cable: CableParams, g_companion: int) -> bool:
        if cable.q < cable.p * (2 * g_companion - 1):
            raise OutOfScopeError(
                f"needs q/p >= 2g-1 = {2 * g_companion - 1}", p=cable.p, q=cable.q, genus=g_companion,
            )
        left = 2 * self.cable_genus(cable, g_companion) - 1
        right = cable.p * cable.q - (cable.q - cable.p * (2 * g_companion - 1))
        return left == right

    def cable_tower(self, layers: Sequence[CableParams]) -> List[TowerStep]:
        """Iterate cabling from the unknot, carrying genus and a tb_bar interval"""
        genus, lower, upper = 0, -1, -1
        steps: List[TowerStep] = []
        for cable in layers:
            if cable.q == -1:
                raise OutOfScopeError("the bound fails for q = -1", p=cable.p, q=cable.q)
            pq = cable.p * cable.q
            genus = cable.p * genus + (cable.p - 1) * (abs(cable.q) - 1) // 2
            new_lower = pq if cable.q < cable.p * lower else pq - (cable.q - cable.p * lower)
            # Bennequin only sharpens positive cables
            new_upper = min(pq, self.bennequin_upper(genus)) if cable.q > 0 else pq
            if new_lower > new_upper:
                raise InternalConsistencyError(
                    f"tb interval [{new_lower}, {new_upper}] is empty", p=cable.p, q=cable.q,
                )
            lower, upper = new_lower, new_upper
            steps.append(TowerStep(p=cable.p, q=cable.q, genus=genus, tb_lower=lower, tb_upper=upper))
            logger.debug(f"C({cable.p},{cable.q}): g={genus}, tb in [{lower}, {upper}]")
        return steps


cables_service = CablesService()
