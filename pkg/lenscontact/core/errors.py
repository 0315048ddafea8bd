"""
Error hierarchy. Every error carries the CLI exit code it maps to and a
machine-readable detail dict, the way routers turn service failures into
status codes.

None of these derive from ValueError, so pydantic validators let them through
unwrapped.
"""
from typing import Any, Dict


class LensContactError(Exception):
    exit_code: int = 1

    def __init__(self, message: str, **detail: Any):
        super().__init__(message)
        self.message = message
        self.detail: Dict[str, Any] = detail

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, "detail": self.detail}


# ── exit 2: bad input ─────────────────────────────────────────────────────
class UsageError(LensContactError):
    exit_code = 2


class InvalidLensSpaceError(UsageError):
    """p < 2, or q divisible by p."""


class NonCoprimeError(InvalidLensSpaceError):
    """gcd(p, q) != 1."""


class InvalidCoefficientError(UsageError):
    """A continued-fraction entry above -2, or an empty expansion."""


class InvalidStructureError(UsageError):
    """A rotation vector outside the ranges allowed by the expansion."""


class InvalidRotationError(UsageError):
    """tb + r even."""


class OutOfScopeError(UsageError):
    """Inputs outside the hypotheses an operation is proven for."""


class InvalidCableError(UsageError):
    pass


class InvalidFrontError(UsageError):
    pass


class InvalidAlexanderError(UsageError):
    pass


class PolynomialSyntaxError(UsageError):
    pass


# ── exit 3 ────────────────────────────────────────────────────────────────
class CapacityExceededError(LensContactError):
    exit_code = 3

    def __init__(self, count: int, cap: int):
        super().__init__(
            f"{count} tight structures exceed the enumeration cap of {cap}",
            count=count,
            cap=cap,
        )


# ── exit 4 ────────────────────────────────────────────────────────────────
class InternalConsistencyError(LensContactError):
    exit_code = 4
