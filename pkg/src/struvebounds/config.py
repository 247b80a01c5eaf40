"""Evaluation configuration for the series engines."""

from __future__ import annotations

import os
from dataclasses import dataclass

MAX_TERMS_ENV = "STRUVE_MAX_TERMS"


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and caps shared by the series evaluators.

    rel_tol   -- truncation target: stop once the next term drops below
                 rel_tol times the accumulated sum
    max_terms -- hard cap on the number of series terms
    x_max     -- overflow guard; arguments above this are rejected outright
    """

    rel_tol: float = 1e-16
    max_terms: int = 500
    x_max: float = 600.0

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1e-6):
            raise ValueError(f"rel_tol must lie in (0, 1e-6), got {self.rel_tol}")
        if self.max_terms < 50:
            raise ValueError(f"max_terms must be >= 50, got {self.max_terms}")
        if self.x_max <= 0.0:
            raise ValueError(f"x_max must be positive, got {self.x_max}")


DEFAULT_CONFIG = EvalConfig()


def config_from_env() -> EvalConfig:
    """Default configuration, with the series cap overridable via STRUVE_MAX_TERMS."""
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return DEFAULT_CONFIG
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_TERMS_ENV} must be an integer, got {raw!r}") from exc
    return EvalConfig(max_terms=cap)
