"""Exception types shared across the package.

Everything numerical raises out of this hierarchy so callers (and the CLI)
can map failures onto a small set of outcomes: bad input, a genuine pole,
or a quadrature that could not certify its tolerance.
"""

from __future__ import annotations

__all__ = [
    "ZetalineError",
    "DomainError",
    "ContractViolation",
    "PoleError",
    "PoleAtOne",
    "RemovableSingularity",
    "IndeterminatePoint",
    "NonFiniteIntegrand",
    "TruncationFailure",
]


class ZetalineError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZetalineError, ValueError):
    """Input lies outside an operation's documented domain."""


class ContractViolation(DomainError):
    """Input is inside the mathematical domain but outside the supported box."""


class PoleError(DomainError):
    """Evaluation was requested at (or too close to) a pole of the function."""


class PoleAtOne(PoleError):
    """zeta(s) requested inside the guard disk around the pole at s = 1."""


class RemovableSingularity(DomainError):
    """Both closed forms of a quantity are singular at the requested point."""


class IndeterminatePoint(DomainError):
    """The requested identity reduces to 0*inf and has no finite arrangement."""


class NonFiniteIntegrand(ZetalineError):
    """An integrand returned NaN or infinity at a quadrature node."""


class TruncationFailure(ZetalineError):
    """No admissible truncation point satisfies the tail bound."""
