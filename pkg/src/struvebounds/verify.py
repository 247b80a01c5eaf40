"""Grid certification of every registered inequality, reference error tables,
crossover location, and the monotonicity/Turan property suites.

Exact values inside certification always come from the power-series route;
the quadrature oracle is reserved for cross-validating the series itself, so
a certification failure can never be self-confirming.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import registry
from .bfunc import b_value
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import MultipleSignChanges, NoSignChange, UnknownBound
from .special_core import (
    iv_value,
    lv_value,
    lv_value_extended,
    mv_value,
    ratio_succ_exact,
    recurrence_check,
)

DEFAULT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Grid:
    """Evaluation grid; orders and arguments are sorted strictly increasing."""

    nu_values: tuple[float, ...]
    x_values: tuple[float, ...]
    y_multipliers: tuple[float, ...] = (1.5, 3.0, 10.0)
    y_cap: float = 60.0

    def __post_init__(self):
        for name, vals in (("nu_values", self.nu_values), ("x_values", self.x_values)):
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError(f"{name} must be sorted strictly increasing")

    def y_values(self, x: float) -> list[float]:
        ys = []
        for m in self.y_multipliers:
            y = min(x * m, self.y_cap)
            if y > x and y not in ys:
                ys.append(y)
        return ys


def default_grid() -> Grid:
    """Fourteen orders spanning every validity edge, sixty log-spaced
    arguments in [1e-3, 50], and argument pairs y = x * {1.5, 3, 10} capped
    at 60."""
    nus = (-1.4, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.5, 5.0, 7.5, 10.0)
    xs = tuple(float(v) for v in np.logspace(-3.0, math.log10(50.0), 60))
    return Grid(nus, xs)


@dataclass
class GridReport:
    """Outcome of certifying one inequality over a grid.

    Slack is signed and normalized: (upper - exact)/|exact| for upper bounds,
    (exact - lower)/|exact| for lower bounds.  Negative slack beyond the
    tolerance is a violation.  Equality orders are recorded with slack 0.
    """

    bound_id: str
    points_checked: int = 0
    violations: list[tuple] = field(default_factory=list)
    worst_slack: float = math.inf
    max_rel_gap: float = -math.inf
    rows: list[tuple] = field(default_factory=list)

    def record(self, nu: float, x: float, y: Optional[float], slack: float,
               tolerance: float, equality: bool) -> None:
        self.points_checked += 1
        if equality:
            status = "equality"
            slack = 0.0
        elif slack < -tolerance:
            status = "violation"
        else:
            status = "ok"
        self.worst_slack = min(self.worst_slack, slack)
        self.max_rel_gap = max(self.max_rel_gap, slack)
        if status == "violation":
            self.violations.append((nu, x, y, slack) if y is not None else (nu, x, slack))
        self.rows.append((nu, x, y, slack, status))

    @property
    def clean(self) -> bool:
        return not self.violations


def certify(bound_id: str, grid: Optional[Grid] = None,
            tolerance: float = DEFAULT_TOLERANCE,
            cfg: EvalConfig = DEFAULT_CONFIG) -> GridReport:
    """Check one registered inequality at every in-range grid point."""
    if tolerance < 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")
    spec = registry.get_bound(bound_id)
    grid = grid or default_grid()
    report = GridReport(bound_id)
    takes_y = registry.needs_y(spec)
    for nu in grid.nu_values:
        if not spec.valid_at(nu):
            continue
        equality = spec.is_equality_at(nu)
        for x in grid.x_values:
            if takes_y:
                for y in grid.y_values(x):
                    exact = registry.exact_value(spec.target, nu, x, y, cfg)
                    bound = spec.evaluate(nu, x, y, cfg)
                    report.record(nu, x, y, _slack(spec.side, bound, exact),
                                  tolerance, equality)
            else:
                exact = registry.exact_value(spec.target, nu, x, None, cfg)
                bound = spec.evaluate(nu, x, cfg)
                report.record(nu, x, None, _slack(spec.side, bound, exact),
                              tolerance, equality)
    return report


def _slack(side: str, bound: float, exact: float) -> float:
    scale = abs(exact) if exact != 0.0 else 1e-300
    if side == "upper":
        return (bound - exact) / scale
    return (exact - bound) / scale


def certify_all(grid: Optional[Grid] = None, tolerance: float = DEFAULT_TOLERANCE,
                cfg: EvalConfig = DEFAULT_CONFIG) -> list[GridReport]:
    return [certify(bid, grid, tolerance, cfg) for bid in registry.bound_ids()]


def certify_eq14_extension(grid: Optional[Grid] = None,
                           tolerance: float = DEFAULT_TOLERANCE,
                           cfg: EvalConfig = DEFAULT_CONFIG) -> GridReport:
    """Probe the conjectured extension of the product-difference positivity
    down to order -1/2.  Informational only; no invariant is asserted here."""
    from .succ_ratio import product_difference

    grid = grid or default_grid()
    report = GridReport("eq14_extension_experiment")
    for nu in grid.nu_values:
        if not (-0.5 - 1e-12 <= nu < 0.5):
            continue
        for x in grid.x_values:
            pd = product_difference(nu, x, cfg)
            scale = abs(pd) if pd != 0.0 else 1e-300
            report.record(nu, x, None, pd / scale, tolerance, False)
    return report


def report_csv_rows(report: GridReport) -> Iterable[str]:
    """Serialize a report, one line per grid point."""
    yield "bound_id,nu,x,y,slack,status"
    for nu, x, y, slack, status in report.rows:
        ystr = repr(y) if y is not None else ""
        yield f"{report.bound_id},{nu!r},{x!r},{ystr},{slack!r},{status}"


# ---------------------------------------------------------------------------
# reference tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableSpec:
    """Layout of one built-in relative-error table.

    zero_column_rule: 'zero' (entry is exactly 0 in the x -> 0 limit),
    'limit_formula' (entry is zero_column(nu), possibly infinite), or None
    when the table has no x = 0 column.
    """

    table_id: int
    nu_rows: tuple[float, ...]
    x_cols: tuple[float, ...]
    approximant_id: str
    exact_id: str
    zero_column_rule: Optional[str]
    zero_column: Optional[Callable[[float], float]] = None


TABLES: dict[int, TableSpec] = {
    1: TableSpec(1, (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0),
                 (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0),
                 "eq17_lower", "succ_ratio_L", "zero", lambda nu: 0.0),
    2: TableSpec(2, (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0),
                 (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0),
                 "eq17_upper", "succ_ratio_L", "limit_formula",
                 lambda nu: math.inf if nu == 0.0 else 1.0 / (2.0 * nu)),
    3: TableSpec(3, (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0),
                 (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0, 50.0),
                 "eq18_lower", "succ_ratio_L", "zero", lambda nu: 0.0),
    4: TableSpec(4, (0.5, 1.0, 2.5, 5.0, 7.5, 10.0),
                 (0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0, 50.0),
                 "eq18_upper", "succ_ratio_L", "limit_formula",
                 lambda nu: math.inf if nu == 0.5 else 2.0 / (2.0 * nu - 1.0)),
    5: TableSpec(5, (0.0, 1.0, 2.5, 5.0, 10.0),
                 (0.5, 1.0, 2.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0, 200.0),
                 "eq39_upper", "pointwise_L", None),
    6: TableSpec(6, (0.0, 1.0, 2.5, 5.0, 10.0),
                 (0.5, 1.0, 2.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0, 200.0),
                 "eq46_upper", "pointwise_L", None),
}

# tables at x up to 200 need the wider overflow guard of the default config
_TABLE_CFG = DEFAULT_CONFIG


def relative_error_table(spec: TableSpec, cfg: EvalConfig = _TABLE_CFG) -> np.ndarray:
    """Matrix of |approximant/exact - 1| over the table layout.

    The x = 0 column, when present, is filled from the table's limit rule.
    """
    bound = registry.get_bound(spec.approximant_id)
    out = np.empty((len(spec.nu_rows), len(spec.x_cols)))
    for i, nu in enumerate(spec.nu_rows):
        for j, x in enumerate(spec.x_cols):
            if x == 0.0:
                out[i, j] = spec.zero_column(nu)
                continue
            exact = registry.exact_value(spec.exact_id, nu, x, None, cfg)
            out[i, j] = abs(bound.evaluate(nu, x, cfg) / exact - 1.0)
    return out


def table_by_id(table_id: int) -> TableSpec:
    try:
        return TABLES[table_id]
    except KeyError:
        raise UnknownBound(f"no table with id {table_id}; valid ids are 1..6") from None


def render_table_text(spec: TableSpec, matrix: np.ndarray) -> str:
    """Fixed four-decimal layout matching the built-in table presentation."""
    header = ["nu\\x"] + [f"{x:g}" for x in spec.x_cols]
    lines = ["  ".join(f"{h:>8}" for h in header)]
    for nu, row in zip(spec.nu_rows, matrix):
        cells = [f"{nu:g}"] + ["inf" if math.isinf(v) else f"{v:.4f}" for v in row]
        lines.append("  ".join(f"{c:>8}" for c in cells))
    return "\n".join(lines)


def render_table_csv(spec: TableSpec, matrix: np.ndarray) -> str:
    """Long-form CSV at full precision; infinite entries are an empty value
    cell with the is_inf flag set, so numeric consumers cannot silently parse
    a sentinel."""
    lines = ["nu,x,value,is_inf"]
    for nu, row in zip(spec.nu_rows, matrix):
        for x, v in zip(spec.x_cols, row):
            if math.isinf(v):
                lines.append(f"{nu!r},{x!r},,1")
            else:
                lines.append(f"{nu!r},{x!r},{float(v)!r},0")
    return "\n".join(lines)


def parse_table_csv(text: str) -> dict[tuple[float, float], float]:
    """Inverse of render_table_csv; infinite cells come back as math.inf."""
    out: dict[tuple[float, float], float] = {}
    lines = text.strip().splitlines()
    if lines[0] != "nu,x,value,is_inf":
        raise ValueError(f"unexpected header {lines[0]!r}")
    for line in lines[1:]:
        nu_s, x_s, v_s, flag = line.split(",")
        out[(float(nu_s), float(x_s))] = math.inf if flag == "1" else float(v_s)
    return out


# ---------------------------------------------------------------------------
# crossover location
# ---------------------------------------------------------------------------

def crossover(bound_id_a: str, bound_id_b: str, nu: float,
              x_range: tuple[float, float] = (0.01, 50.0),
              cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Argument at which two competing bounds exchange dominance.

    A 200-point pre-scan must find exactly one sign change of the difference
    on x_range; the root is then bisected to absolute tolerance 1e-4.
    """
    spec_a = registry.get_bound(bound_id_a)
    spec_b = registry.get_bound(bound_id_b)

    def diff(x: float) -> float:
        return spec_a.evaluate(nu, x, cfg) - spec_b.evaluate(nu, x, cfg)

    lo, hi = x_range
    xs = np.linspace(lo, hi, 200)
    signs = [math.copysign(1.0, diff(float(x))) if diff(float(x)) != 0.0 else 0.0
             for x in xs]
    brackets = [(float(xs[i - 1]), float(xs[i]))
                for i in range(1, len(xs))
                if signs[i - 1] != 0.0 and signs[i] != 0.0 and signs[i] != signs[i - 1]]
    if not brackets:
        raise NoSignChange(
            f"{bound_id_a} - {bound_id_b} keeps one sign on {x_range} at nu={nu}"
        )
    if len(brackets) > 1:
        raise MultipleSignChanges(
            f"{bound_id_a} - {bound_id_b} changes sign {len(brackets)} times on "
            f"{x_range} at nu={nu}"
        )
    a, b = brackets[0]
    fa = diff(a)
    while b - a > 1e-4:
        mid = 0.5 * (a + b)
        fm = diff(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


# ---------------------------------------------------------------------------
# monotonicity / structural property suites
# ---------------------------------------------------------------------------

def _comparison_report(name: str, pairs: Iterable[tuple[float, float, float, float]],
                       tolerance: float = 0.0) -> GridReport:
    """Strict-inequality report: each item is (nu, x, lhs, rhs) requiring
    lhs < rhs; slack is (rhs - lhs)/|rhs|."""
    report = GridReport(name)
    for nu, x, lhs, rhs in pairs:
        scale = abs(rhs) if rhs != 0.0 else 1e-300
        slack = (rhs - lhs) / scale
        report.record(nu, x, None, slack, tolerance, False)
    return report


def monotonicity_suite(cfg: EvalConfig = DEFAULT_CONFIG) -> list[GridReport]:
    """Structural properties checked on well-separated grids (spacing >= 0.05,
    strict comparisons at tolerance 0):

    - the kernel decreases in x and increases in the order
    - the successive-order ratio decreases in the order from 1/2 up
    - the Turan product inequality
    - domination of the Bessel ratio by the M-ratio from order 1/2 up
    - both three-term recurrence residuals stay at rounding level
    """
    grid = default_grid()
    reports = []

    xs_lin = [round(0.1 + 0.05 * k, 10) for k in range(999)]  # 0.1 .. 50
    pairs = []
    for nu in grid.nu_values:
        prev = b_value(nu, xs_lin[0], cfg)
        for x in xs_lin[1:]:
            cur = b_value(nu, x, cfg)
            pairs.append((nu, x, cur, prev))  # decreasing: b(x) < b(prev x)
            prev = cur
    reports.append(_comparison_report("mono_b_decreasing_in_x", pairs))

    nus_lin = [round(-1.4 + 0.05 * k, 10) for k in range(229)]  # -1.4 .. 10
    pairs = []
    for x in (0.5, 2.0, 10.0):
        prev = b_value(nus_lin[0], x, cfg)
        for nu in nus_lin[1:]:
            cur = b_value(nu, x, cfg)
            pairs.append((nu, x, prev, cur))  # increasing: b(prev nu) < b(nu)
            prev = cur
    reports.append(_comparison_report("mono_b_increasing_in_nu", pairs))

    ratio_nus = [0.5 + 0.25 * k for k in range(39)]  # 0.5 .. 10
    pairs = []
    for x in (0.5, 2.0, 10.0, 30.0):
        prev = ratio_succ_exact("L", ratio_nus[0] + 1.0, x, cfg)
        for nu in ratio_nus[1:]:
            cur = ratio_succ_exact("L", nu + 1.0, x, cfg)
            pairs.append((nu, x, cur, prev))  # decreasing in the order
            prev = cur
    reports.append(_comparison_report("mono_succ_ratio_decreasing_in_nu", pairs))

    pairs = []
    for nu in grid.nu_values:
        for x in grid.x_values:
            left = lv_value_extended(nu - 1.0, x, cfg) * lv_value(nu + 1.0, x, cfg)
            right = lv_value(nu, x, cfg) ** 2
            pairs.append((nu, x, left, right))
    reports.append(_comparison_report("turan_product", pairs))

    pairs = []
    for nu in grid.nu_values:
        if nu < 0.5:
            continue
        for x in grid.x_values:
            if x > 30.0:
                continue
            m_ratio = mv_value(nu, x, cfg) / mv_value(nu - 1.0, x, cfg)
            i_ratio = iv_value(nu, x, cfg) / iv_value(nu - 1.0, x, cfg)
            pairs.append((nu, x, i_ratio, m_ratio))  # I-ratio < M-ratio
    reports.append(_comparison_report("m_ratio_dominates_bessel_ratio", pairs))

    report = GridReport("recurrence_residuals")
    for nu in grid.nu_values:
        if nu <= -0.5:
            continue
        for x in grid.x_values:
            r1, r2 = recurrence_check(nu, x, cfg)
            report.record(nu, x, None, DEFAULT_TOLERANCE - max(r1, r2),
                          0.0, False)
    reports.append(report)
    return reports
