"""
Data models for lens spaces, tight structures and obstruction reports.
Validation raises the errors in lenscontact.core.errors directly.
"""

from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from lenscontact.core.errors import (
    InternalConsistencyError,
    InvalidAlexanderError,
    InvalidCableError,
    InvalidCoefficientError,
    InvalidFrontError,
    InvalidLensSpaceError,
    InvalidRotationError,
    InvalidStructureError,
    NonCoprimeError,
)

# ============================================================================
# LENS SPACES AND EXPANSIONS
# ============================================================================


class LensSpace(BaseModel):
    """L(p,q), the -p/q surgery on the unknot; q is stored reduced into [1, p)"""
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., description="Order of H1; at least 2")
    q: int = Field(..., description="Twisting parameter, coprime to p")

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        p, q = data.get("p"), data.get("q")
        if not isinstance(p, int) or not isinstance(q, int):
            raise InvalidLensSpaceError("p and q must be integers", p=p, q=q)
        if p < 2:
            raise InvalidLensSpaceError(f"L({p},{q}) needs p >= 2", p=p, q=q)
        if q % p == 0:
            raise InvalidLensSpaceError(f"L({p},{q}) needs q not divisible by p", p=p, q=q)
        if gcd(p, q) != 1:
            raise NonCoprimeError(f"gcd({p},{q}) = {gcd(p, q)}", p=p, q=q)
        return {**data, "q": q % p}

    @property
    def label(self) -> str:
        return f"L({self.p},{self.q})"


def _fold(coeffs: Tuple[int, ...]) -> Fraction:
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - 1 / value
    return value


class ContinuedFraction(BaseModel):
    """Negative continued fraction [a1, ..., an] of -p/q"""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(..., description="Entries, each at most -2")
    p: int
    q: int

    @model_validator(mode="after")
    def _check(self) -> "ContinuedFraction":
        if not self.coeffs:
            raise InvalidCoefficientError("empty continued fraction")
        for i, a in enumerate(self.coeffs, start=1):
            if a > -2:
                raise InvalidCoefficientError(
                    f"a{i} = {a} is above -2", index=i, value=a, coeffs=list(self.coeffs)
                )
        if _fold(self.coeffs) != Fraction(-self.p, self.q):
            raise InternalConsistencyError(
                f"{list(self.coeffs)} does not evaluate to -{self.p}/{self.q}",
                coeffs=list(self.coeffs), p=self.p, q=self.q,
            )
        return self

    @property
    def n(self) -> int:
        return len(self.coeffs)


class IntMatrix(BaseModel):
    """Square integer matrix, row-major"""
    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))


# ============================================================================
# TIGHT STRUCTURES AND LEGENDRIANS
# ============================================================================


class TightStructure(BaseModel):
    """Tight contact structure on L(p,q), recorded by its rotation vector"""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(..., description="Expansion the vector is attached to")
    rvec: Tuple[int, ...] = Field(..., description="r_i in {a_i+2, a_i+4, ..., |a_i|-2}")

    @model_validator(mode="after")
    def _check(self) -> "TightStructure":
        if len(self.rvec) != len(self.coeffs):
            raise InvalidStructureError(
                f"rotation vector has {len(self.rvec)} entries, expansion has {len(self.coeffs)}",
                rvec=list(self.rvec), coeffs=list(self.coeffs),
            )
        for i, (a, r) in enumerate(zip(self.coeffs, self.rvec), start=1):
            if abs(r) > abs(a) - 2 or (r - a) % 2:
                raise InvalidStructureError(
                    f"r{i} = {r} not allowed for a{i} = {a}", index=i, rvec=list(self.rvec),
                )
        return self


class LegendrianClass(BaseModel):
    """(tb, r) of a Legendrian knot"""
    model_config = ConfigDict(frozen=True)

    tb: int
    r: int

    @model_validator(mode="after")
    def _check(self) -> "LegendrianClass":
        if (self.tb + self.r) % 2 == 0:
            raise InvalidRotationError(f"tb + r = {self.tb + self.r} must be odd", tb=self.tb, r=self.r)
        return self


# ============================================================================
# OBSTRUCTION REPORTS
# ============================================================================


class Verdict(str, Enum):
    RULED_OUT = "RULED_OUT"
    NOT_RULED_OUT = "NOT_RULED_OUT"


class NegativeTbCase(str, Enum):
    LP1 = "LP1"
    L74_SPECIAL = "L74_SPECIAL"
    GENERAL_BOUND = "GENERAL_BOUND"


class Reason(BaseModel):
    """One step of the feasibility procedure and the data that decided it"""
    rule: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    rules_out: bool = True
    literature: bool = False
    citation: Optional[str] = None


class FeasibilityReport(BaseModel):
    """Whether L(p,q) can be a summand of a reducible surgery on a knot with the given tb_bar"""
    p: int
    q: int
    tb_bar: int
    verdict: Verdict
    reasons: List[Reason]
    literature_facts_used: bool = False

    @model_validator(mode="after")
    def _check(self) -> "FeasibilityReport":
        blocking = [r for r in self.reasons if r.rules_out]
        if self.verdict == Verdict.RULED_OUT and not blocking:
            raise InternalConsistencyError("RULED_OUT without a reason", p=self.p, q=self.q)
        if self.verdict == Verdict.NOT_RULED_OUT:
            if blocking:
                raise InternalConsistencyError("NOT_RULED_OUT with a blocking reason", p=self.p, q=self.q)
            if not any("r0" in r.witness for r in self.reasons):
                raise InternalConsistencyError("NOT_RULED_OUT without a witness", p=self.p, q=self.q)
        if self.literature_facts_used != any(r.literature for r in self.reasons):
            raise InternalConsistencyError("literature flag out of sync", p=self.p, q=self.q)
        return self


# ============================================================================
# FRONTS, CABLES, ALEXANDER POLYNOMIALS
# ============================================================================


class FrontStats(BaseModel):
    """Writhe and cusp count of a front diagram"""
    model_config = ConfigDict(frozen=True)

    writhe: int
    cusps: int

    @model_validator(mode="after")
    def _check(self) -> "FrontStats":
        if self.cusps < 2 or self.cusps % 2:
            raise InvalidFrontError(f"cusp count {self.cusps} must be even and at least 2", cusps=self.cusps)
        return self

    @property
    def tb(self) -> int:
        return self.writhe - self.cusps // 2


class CableParams(BaseModel):
    """(p,q) cable parameters, sign-normalized so p >= 2"""
    model_config = ConfigDict(frozen=True)

    p: int
    q: int

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        p, q = data.get("p"), data.get("q")
        if not isinstance(p, int) or not isinstance(q, int):
            raise InvalidCableError("cable parameters must be integers", p=p, q=q)
        if p < 0:
            p, q = -p, -q
        if p < 2:
            raise InvalidCableError(f"({p},{q}) cable needs |p| >= 2", p=p, q=q)
        if gcd(p, q) != 1:
            raise InvalidCableError(f"({p},{q}) cable needs gcd(p,q) = 1", p=p, q=q)
        return {"p": p, "q": q}


class TowerStep(BaseModel):
    """One layer of an iterated cable of the unknot"""
    p: int
    q: int
    genus: int
    tb_lower: int
    tb_upper: int

    @property
    def exact(self) -> bool:
        return self.tb_lower == self.tb_upper


class LaurentPoly(BaseModel):
    """Sparse Laurent polynomial in t, exponent -> coefficient, zero terms dropped"""
    model_config = ConfigDict(frozen=True)

    coeffs: Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _strip(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "coeffs" not in data:
            return data
        try:
            items = list(data["coeffs"].items())
        except AttributeError:
            raise InvalidAlexanderError("coefficients must map integer exponents to integers")
        cleaned = {}
        for e, c in items:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidAlexanderError(f"coefficient {c!r} of t^{e} is not an integer", exponent=str(e))
            if isinstance(e, bool) or not isinstance(e, (int, str)):
                raise InvalidAlexanderError(f"exponent {e!r} is not an integer", exponent=str(e))
            try:
                exponent = int(e)
            except ValueError:
                raise InvalidAlexanderError(f"exponent {e!r} is not an integer", exponent=str(e))
            if c:
                cleaned[exponent] = cleaned.get(exponent, 0) + c
        return {"coeffs": {e: c for e, c in cleaned.items() if c}}

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-e, 0) == c for e, c in self.coeffs.items())

    def negated(self) -> "LaurentPoly":
        return LaurentPoly(coeffs={e: -c for e, c in self.coeffs.items()})

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{'-' if c < 0 else ''}{body}" if not parts else f" {sign} {body}")
        return "".join(parts)


# ============================================================================
# OUTPUT
# ============================================================================


class OutputEnvelope(BaseModel):
    """Wrapper for --json --envelope output"""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    version: str


class SummandProfile(BaseModel):
    """Per-lens-space data the feasibility procedure reuses across tb_bar values"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: LensSpace
    coeffs: Tuple[int, ...]
    d3_can: Fraction
    rotation_numbers: Tuple[int, ...]
