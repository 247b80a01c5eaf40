"""The correction kernel b_nu(x) = (x/2)^(nu+1) / (sqrt(pi) Gamma(nu+3/2) L_nu(x)).

b maps (0, inf) into (0, 1/2) for every order nu > -3/2, decreases in x,
increases in nu, and decays like x^(nu+3/2) e^{-x}.  It is the quantity that
turns every Bessel-ratio bound into a Struve-ratio bound, so its own
two-sided estimates live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .brackets import Bracket
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError
from .special_core import SQRT_PI, lv_value, recurrence_term

_EQ_TOL = 1e-12


@dataclass(frozen=True)
class BValue:
    """Kernel value together with the point it was evaluated at."""

    value: float
    nu: float
    x: float


def a_coefficient(nu: float, x: float) -> float:
    """(x/2)^nu / (sqrt(pi) Gamma(nu+3/2)); satisfies b = x * a / (2 L)."""
    return recurrence_term(nu, x)


def _check_domain(nu: float, x: float) -> None:
    if not math.isfinite(nu) or nu <= -1.5:
        raise DomainError(f"kernel requires nu > -3/2, got {nu}")
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"kernel requires x > 0, got {x}")


@lru_cache(maxsize=300_000)
def b_value(nu: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Value-only kernel evaluation with a log-space fallback.

    The direct quotient is exact enough whenever it stays normal; once the
    numerator or quotient would leave double range the value is rebuilt as
    exp(log-numerator - log-denominator).  L > 0 on the whole domain.
    """
    _check_domain(nu, x)
    denom = SQRT_PI * math.gamma(nu + 1.5) * lv_value(nu, x, cfg)
    num = (0.5 * x) ** (nu + 1.0)
    if num > 0.0 and math.isfinite(num) and math.isfinite(denom):
        q = num / denom
        if math.isfinite(q) and q != 0.0:
            return q
    log_num = (nu + 1.0) * math.log(0.5 * x)
    log_den = math.log(SQRT_PI) + math.lgamma(nu + 1.5) + math.log(lv_value(nu, x, cfg))
    return math.exp(log_num - log_den)


def b_eval(nu: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> BValue:
    """Kernel value; lies strictly inside (0, 1/2) for nu > -3/2, x > 0."""
    return BValue(b_value(nu, x, cfg), nu, x)


def b_upper_quadratic(nu: float, x: float) -> float:
    """Strict upper bound (1/2) (1 + x^2 / (3(2 nu+3)))^{-1}, nu > -3/2."""
    _check_domain(nu, x)
    return 0.5 / (1.0 + x * x / (3.0 * (2.0 * nu + 3.0)))


def b_csch_bracket(nu: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Bracket:
    """Hyperbolic bracket (x/2) csch(x) <= b_nu(x) < (x/4) csch(x/(2 nu+3)).

    The lower side is valid for nu >= -1/2 (equality exactly at nu = -1/2,
    and the comparison reverses below -1/2); the upper side is valid for
    nu > -1.
    """
    _check_domain(nu, x)
    lower = 0.5 * x / math.sinh(x)
    upper = 0.25 * x / math.sinh(x / (2.0 * nu + 3.0))
    return Bracket(
        lower=lower,
        upper=upper,
        lower_valid=nu >= -0.5 - _EQ_TOL,
        upper_valid=nu > -1.0,
        lower_id="eq13_lower",
        upper_id="eq13_upper",
    )


def b_asym(nu: float, x: float, regime: str) -> float:
    """Limiting forms of the kernel.

    small: 1/2 - x^2 / (6(2 nu+3));  large: x^(nu+3/2) e^{-x} / (2^(nu+1/2) Gamma(nu+3/2)).
    """
    if not math.isfinite(nu) or nu <= -1.5:
        raise DomainError(f"kernel asymptotics require nu > -3/2, got {nu}")
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"kernel asymptotics require x >= 0, got {x}")
    if regime == "small":
        return 0.5 - x * x / (6.0 * (2.0 * nu + 3.0))
    if regime == "large":
        return x ** (nu + 1.5) * math.exp(-x) / (2.0 ** (nu + 0.5) * math.gamma(nu + 1.5))
    raise DomainError(f"regime must be 'small' or 'large', got {regime!r}")
