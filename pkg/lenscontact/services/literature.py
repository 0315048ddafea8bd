"""
Results from the literature that the feasibility procedure may consult when
asked to. Each fact rules out a lens space summand outright; matching is up to
homeomorphism (q or q^-1 mod p).
"""
from math import gcd
from typing import Callable, List, Tuple

from pydantic import BaseModel

from lenscontact.models.schemas import LensSpace
from lenscontact.services.contfrac_service import contfrac_service


class LiteratureFact(BaseModel):
    rule: str
    citation: str
    description: str


def normalized_t(tau: int) -> int:
    return tau if tau % 2 else tau - 1


# ── predicates on (space, tb_bar) ──────────────────────────────────────────
def _is(space: LensSpace, p: int, q: int) -> bool:
    if space.p != p or gcd(p, q) != 1:
        return False
    return contfrac_service.homeomorphic(space, LensSpace(p=p, q=q))


def _lp2_large(space: LensSpace, tb_bar: int) -> bool:
    return space.p >= 15 and _is(space, space.p, 2)


def _l92(space: LensSpace, tb_bar: int) -> bool:
    return _is(space, 9, 2)


def _l83(space: LensSpace, tb_bar: int) -> bool:
    return _is(space, 8, 3)


def _l4k3(space: LensSpace, tb_bar: int) -> bool:
    if tb_bar >= 0 or space.p < 7 or space.p % 4 != 3 or not _is(space, space.p, 4):
        return False
    tau = -tb_bar
    return space.p == 2 * normalized_t(tau) - 3 and tau != 6


FACTS: List[Tuple[LiteratureFact, Callable[[LensSpace, int], bool]]] = [
    (
        LiteratureFact(
            rule="LP2_STEIN_FILLINGS",
            citation="Kaloti, Stein fillings of planar open books, Thm. 1.10",
            description="for p >= 15 every tight L(p,2) has a unique Stein filling, with b2 = 2",
        ),
        _lp2_large,
    ),
    (
        LiteratureFact(
            rule="L92_STEIN_FILLINGS",
            citation="Lisca, On symplectic fillings of lens spaces",
            description="Stein fillings of the tight structures on L(9,2) all have b2 = 2",
        ),
        _l92,
    ),
    (
        LiteratureFact(
            rule="L83_STEIN_FILLINGS",
            citation="Lisca, On symplectic fillings of lens spaces",
            description="Stein fillings of the tight structures on L(8,3) all have b2 = 2",
        ),
        _l83,
    ),
    (
        LiteratureFact(
            rule="L4K3_SYMPLECTIC_HOMOLOGY",
            citation="Bourgeois-Ekholm-Eliashberg surgery formula; Lisca, fillings of (L(p,q), xi_can)",
            description="at p = 2t-3 the surgered knot is a stabilization, so symplectic homology "
                        "vanishes, contradicting the filling of (L(p,4), xi_can)",
        ),
        _l4k3,
    ),
]


def matching_facts(space: LensSpace, tb_bar: int) -> List[LiteratureFact]:
    return [fact for fact, applies in FACTS if applies(space, tb_bar)]
