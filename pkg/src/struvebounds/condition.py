"""Condition numbers C(f)(x) = x f'(x)/f(x) for L and I, with their brackets.

C(L_nu) is evaluated through the downward relation
C(L_nu)(x) = x L_{nu-1}(x)/L_nu(x) - nu, which is the single source of truth;
the upward relation C(L_nu)(x) = x L_{nu+1}(x)/L_nu(x) + nu + 2 b_nu(x) is
kept as a residual cross-check only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bfunc import b_value
from .brackets import Bracket
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError
from .special_core import iv_value, lv_value, lv_value_extended

_EQ_TOL = 1e-12


@dataclass(frozen=True)
class CondValue:
    """A condition-number value; positive for L when nu >= -1, for I when nu >= 0."""

    value: float
    kind: str
    nu: float
    x: float


def _check_x(x: float) -> None:
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be a finite positive real, got {x}")


def cond_exact(kind: str, nu: float, x: float,
               cfg: EvalConfig = DEFAULT_CONFIG) -> CondValue:
    """Reference condition number via the downward ratio."""
    _check_x(x)
    if kind == "L":
        value = x * lv_value_extended(nu - 1.0, x, cfg) / lv_value(nu, x, cfg) - nu
    elif kind == "I":
        value = x * iv_value(nu - 1.0, x, cfg) / iv_value(nu, x, cfg) - nu
    else:
        raise DomainError(f"kind must be 'L' or 'I', got {kind!r}")
    return CondValue(value, kind, nu, x)


def cond_upward_residual(nu: float, x: float,
                         cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """|downward - upward| / |downward| for C(L); an identity residual."""
    down = cond_exact("L", nu, x, cfg).value
    up = x * lv_value(nu + 1.0, x, cfg) / lv_value(nu, x, cfg) + nu \
        + 2.0 * b_value(nu, x, cfg)
    return abs(down - up) / abs(down)


def cond_bracket_via_bessel(nu: float, x: float,
                            cfg: EvalConfig = DEFAULT_CONFIG) -> Bracket:
    """C(I_nu) < C(L_nu) < C(I_nu) + 2 b_nu(x).

    Lower side valid nu >= 1/2, upper side valid nu >= -1/2.
    """
    _check_x(x)
    ci = cond_exact("I", nu, x, cfg).value
    return Bracket(ci, ci + 2.0 * b_value(nu, x, cfg),
                   nu >= 0.5 - _EQ_TOL, nu >= -0.5 - _EQ_TOL,
                   "eq28_lower", "eq28_upper")


def _sqrt_bracket_eq29(nu, x, b0):
    lower = math.hypot(nu - 0.5, x) - 0.5
    upper = math.hypot(nu + b0, x) + b0
    return lower, upper


def cond_bracket_sqrt(nu: float, x: float, variant: str,
                      cfg: EvalConfig = DEFAULT_CONFIG) -> Bracket:
    """Algebraic brackets for C(L_nu), one per published inequality.

    eq29:  [sqrt((nu-1/2)^2+x^2) - 1/2, sqrt((nu+b)^2+x^2) + b]
           lower nu >= 1/2, upper nu >= -1/2
    eq30:  [sqrt((nu+1+b')^2+x^2) + 2b - b' - 1, sqrt((nu+1/2)^2+x^2) + 2b - 1/2]
           lower nu >= -1, upper nu >= -1/2   (b' = b at order nu+1)
    eq31:  lower only: nu + 2b + x^2/(nu + 1/2 + 2b' + sqrt((nu+3/2)^2+x^2)),
           nu >= -1
    apti:  upper only: sqrt(x^2 + nu^2 + 2(2 nu+1) b), nu > -3/2
    prior: lower only: max of nu+1 (nu > -3/2) and the hyperbolic
           x coth(x/2) - nu (nu >= 1/2, equality at nu = 1/2); see
           prior_lower_bound for the individual members.
    """
    _check_x(x)
    if variant == "eq29":
        b0 = b_value(nu, x, cfg) if nu > -1.5 else math.nan
        lower, upper = _sqrt_bracket_eq29(nu, x, b0)
        return Bracket(lower, upper, nu >= 0.5 - _EQ_TOL, nu >= -0.5 - _EQ_TOL,
                       "eq29_lower", "eq29_upper")
    if variant == "eq30":
        b0 = b_value(nu, x, cfg)
        b1 = b_value(nu + 1.0, x, cfg)
        lower = math.hypot(nu + 1.0 + b1, x) + 2.0 * b0 - b1 - 1.0
        upper = math.hypot(nu + 0.5, x) + 2.0 * b0 - 0.5
        return Bracket(lower, upper, nu >= -1.0 - _EQ_TOL, nu >= -0.5 - _EQ_TOL,
                       "eq30_lower", "eq30_upper")
    if variant == "eq31":
        b0 = b_value(nu, x, cfg)
        b1 = b_value(nu + 1.0, x, cfg)
        lower = nu + 2.0 * b0 + x * x / (nu + 0.5 + 2.0 * b1 + math.hypot(nu + 1.5, x))
        return Bracket(lower, math.inf, nu >= -1.0 - _EQ_TOL, False,
                       "eq31_lower", "")
    if variant == "apti":
        b0 = b_value(nu, x, cfg)
        upper = math.sqrt(x * x + nu * nu + 2.0 * (2.0 * nu + 1.0) * b0)
        return Bracket(-math.inf, upper, False, nu > -1.5, "", "eq27_upper")
    if variant == "prior":
        candidates = [(prior_lower_bound(nu, x, name), name)
                      for name in ("prior_nup1", "prior_xminus", "prior_coth")
                      if _prior_valid(nu, name)]
        if not candidates:
            return Bracket(-math.inf, math.inf, False, False, "", "")
        lower, name = max(candidates)
        return Bracket(lower, math.inf, True, False, name, "")
    raise DomainError(f"unknown variant {variant!r}")


def _prior_valid(nu: float, name: str) -> bool:
    if name == "prior_nup1":
        return nu > -1.5
    # both remaining members are consequences of the tanh(x/2) ratio bound
    return nu >= 0.5 - _EQ_TOL


def prior_lower_bound(nu: float, x: float, name: str) -> float:
    """Earlier lower bounds kept for dominance comparisons.

    prior_nup1:   nu + 1,              nu > -3/2
    prior_xminus: x - nu,              nu >= 1/2
    prior_coth:   x coth(x/2) - nu,    nu >= 1/2 (equality at nu = 1/2)
    """
    _check_x(x)
    if not _prior_valid(nu, name):
        raise DomainError(f"{name} is not valid at nu={nu}")
    if name == "prior_nup1":
        return nu + 1.0
    if name == "prior_xminus":
        return x - nu
    if name == "prior_coth":
        return x / math.tanh(0.5 * x) - nu
    raise DomainError(f"unknown prior bound {name!r}")
