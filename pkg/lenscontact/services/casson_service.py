"""
Alexander polynomials and the Casson-Walker surgery formula used to rule out
an L(|n|,1) summand.
"""
import logging
import re
from collections import defaultdict
from fractions import Fraction
from typing import List, Mapping, Union

from lenscontact.core.errors import (
    InternalConsistencyError,
    InvalidAlexanderError,
    OutOfScopeError,
    PolynomialSyntaxError,
    UsageError,
)
from lenscontact.models.schemas import LaurentPoly, NegativeTbCase
from lenscontact.services.obstruct_service import obstruct_service

logger = logging.getLogger(__name__)

# term := [sign] [digits] [ ['*'] 't' ['^' exponent] ]
# exponent := int | '(' int ')' | '{' int '}'
_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*"
    r"(?P<var>\*?\s*t(?:\s*\^\s*(?:\(\s*(?P<paren>[+-]?\d+)\s*\)|\{\s*(?P<brace>[+-]?\d+)\s*\}|(?P<bare>[+-]?\d+)))?)?"
    r"\s*"
)


class CassonService:

    # ════════════════════════════════════════════════════════
    # PARSING
    # ════════════════════════════════════════════════════════
    def parse_polynomial(self, source: Union[str, Mapping]) -> LaurentPoly:
        if isinstance(source, Mapping):
            return LaurentPoly(coeffs=dict(source))
        text = source.strip()
        if not text:
            raise PolynomialSyntaxError("empty polynomial", position=0)
        coeffs = defaultdict(int)
        pos = 0
        while pos < len(text):
            match = _TERM.match(text, pos)
            if match is None or match.end() == pos or (match["coef"] is None and match["var"] is None):
                raise PolynomialSyntaxError(f"cannot parse term at position {pos}", position=pos, text=text)
            if match["sign"] is None and pos > 0:
                raise PolynomialSyntaxError(f"missing '+' or '-' at position {pos}", position=pos, text=text)
            value = int(match["coef"]) if match["coef"] else 1
            if match["sign"] == "-":
                value = -value
            if match["var"]:
                exponent_text = match["paren"] or match["brace"] or match["bare"]
                exponent = int(exponent_text) if exponent_text else 1
            else:
                exponent = 0
            coeffs[exponent] += value
            pos = match.end()
        return LaurentPoly(coeffs=dict(coeffs))

    # ════════════════════════════════════════════════════════
    # INVARIANTS
    # ════════════════════════════════════════════════════════
    def normalize_alexander(self, poly: LaurentPoly) -> LaurentPoly:
        if not poly.is_symmetric():
            raise InvalidAlexanderError(f"{poly.render()} is not symmetric under t -> 1/t", poly=poly.render())
        value = poly.value_at_one()
        if value == -1:
            return poly.negated()
        if value != 1:
            raise InvalidAlexanderError(f"{poly.render()} evaluates to {value} at t = 1", poly=poly.render())
        return poly

    def half_second_derivative(self, poly: LaurentPoly) -> int:
        """Delta''(1)/2, which equals the Conway coefficient a2"""
        poly = self.normalize_alexander(poly)
        total = sum(c * e * (e - 1) for e, c in poly.coeffs.items())
        if total % 2:
            raise InternalConsistencyError(f"second derivative {total} is odd", poly=poly.render())
        return total // 2

    def casson_surgery_delta(self, half_dd: int, n: int) -> Fraction:
        if n == 0:
            raise UsageError("surgery coefficient must be nonzero", n=n)
        return Fraction(half_dd, n)

    def parity_obstruction(self, half_dd: int, n: int) -> bool:
        if n >= 0:
            raise OutOfScopeError(f"needs n < 0, got {n}", n=n)
        return half_dd % (2 * n) != 0

    def tb_negative_arf_verdict(self, half_dd: int, tb_bar: int, n: int) -> List[NegativeTbCase]:
        """Cases of the negative-tb classification that survive the Casson-Walker parity test"""
        cases = obstruct_service.classify_negative_tb(tb_bar, n)
        if self.parity_obstruction(half_dd, n):
            cases = [c for c in cases if c != NegativeTbCase.LP1]
        return cases


casson_service = CassonService()
