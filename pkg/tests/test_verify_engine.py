import math

import numpy as np
import pytest

from struvebounds import (
    Grid,
    MultipleSignChanges,
    NoSignChange,
    UnknownBound,
    certify,
    certify_all,
    certify_eq14_extension,
    crossover,
    default_grid,
    monotonicity_suite,
    relative_error_table,
    table_by_id,
)
from struvebounds.brackets import BoundSpec
from struvebounds.registry import REGISTRY
from struvebounds.verify import (
    TABLES,
    parse_table_csv,
    render_table_csv,
    render_table_text,
    report_csv_rows,
)


@pytest.fixture
def small_grid():
    return Grid((-0.5, 0.0, 0.5, 1.0, 2.5, 10.0),
                tuple(float(v) for v in np.logspace(-2, math.log10(30.0), 10)))


class TestCertify:
    def test_upper_bracket_clean(self, small_grid):
        rep = certify("eq17_upper", small_grid)
        assert rep.clean
        assert rep.points_checked == 4 * 10  # four orders are >= 1/2
        assert rep.worst_slack >= -1e-12

    def test_positivity_clean(self, small_grid):
        rep = certify("eq14_positivity", small_grid)
        assert rep.clean and rep.points_checked > 0

    def test_equality_points_flagged_not_violations(self, small_grid):
        rep = certify("eq20_upper", small_grid)
        assert rep.clean
        eq_rows = [r for r in rep.rows if r[4] == "equality"]
        assert len(eq_rows) == 10  # the nu = 1/2 row
        assert all(r[3] == 0.0 for r in eq_rows)

    def test_violations_iff_worst_slack_beyond_tolerance(self, small_grid):
        for bid in ("eq18_lower", "eq13_lower", "eq39_upper"):
            rep = certify(bid, small_grid)
            assert (not rep.violations) == (rep.worst_slack >= -1e-12)

    def test_unknown_bound(self):
        with pytest.raises(UnknownBound):
            certify("eq99_lower")

    def test_deterministic(self, small_grid):
        a = certify("eq31_lower", small_grid)
        b = certify("eq31_lower", small_grid)
        assert a.rows == b.rows and a.worst_slack == b.worst_slack

    def test_arg_ratio_bound_uses_pairs(self, small_grid):
        rep = certify("eq38_upper", small_grid)
        assert rep.clean
        assert all(r[2] is not None for r in rep.rows)

    def test_full_registry_clean_on_default_grid(self):
        reports = certify_all()
        assert all(rep.clean for rep in reports)
        assert len(reports) == len(REGISTRY)

    def test_extension_probe_reports_cleanly(self, small_grid):
        rep = certify_eq14_extension(small_grid)
        assert rep.bound_id == "eq14_extension_experiment"
        assert rep.points_checked == 2 * 10  # orders -1/2 and 0
        assert rep.clean


class TestTables:
    def test_spot_values(self):
        t1 = relative_error_table(TABLES[1])
        assert t1[0][3] == pytest.approx(0.1073, abs=2e-4)   # nu=0,   x=2.5
        assert t1[2][4] == pytest.approx(0.0186, abs=2e-4)   # nu=1,   x=5
        t3 = relative_error_table(TABLES[3])
        assert t3[4][4] == pytest.approx(0.0132, abs=2e-4)   # nu=5,   x=5
        t6 = relative_error_table(TABLES[6])
        assert t6[4][8] == pytest.approx(2.4709, abs=2e-4)   # nu=10,  x=100

    def test_zero_column_rules(self):
        t1 = relative_error_table(TABLES[1])
        assert all(v == 0.0 for v in t1[:, 0])
        t2 = relative_error_table(TABLES[2])
        assert math.isinf(t2[0][0])
        assert t2[1][0] == 1.0 and t2[3][0] == pytest.approx(0.2)
        t4 = relative_error_table(TABLES[4])
        assert math.isinf(t4[0][0])
        assert t4[1][0] == pytest.approx(2.0)
        assert t4[2][0] == pytest.approx(0.5)

    def test_table_lookup(self):
        assert table_by_id(5).approximant_id == "eq39_upper"
        with pytest.raises(UnknownBound):
            table_by_id(7)

    def test_text_rendering(self):
        spec = TABLES[2]
        text = render_table_text(spec, relative_error_table(spec))
        assert "inf" in text
        assert "0.6481" in text  # nu=0.5, x=1

    def test_csv_round_trip_exact(self):
        spec = TABLES[4]
        matrix = relative_error_table(spec)
        parsed = parse_table_csv(render_table_csv(spec, matrix))
        for i, nu in enumerate(spec.nu_rows):
            for j, x in enumerate(spec.x_cols):
                assert parsed[(nu, x)] == matrix[i][j] or (
                    math.isinf(parsed[(nu, x)]) and math.isinf(matrix[i][j]))

    def test_report_csv_rows(self, ):
        rep = certify("eq20_upper", Grid((0.5, 1.0), (1.0, 2.0)))
        rows = list(report_csv_rows(rep))
        assert rows[0] == "bound_id,nu,x,y,slack,status"
        assert len(rows) == 1 + rep.points_checked
        assert any(",equality" in r for r in rows)


class TestCrossover:
    def test_tanh_vs_algebraic_upper(self):
        assert crossover("eq20_upper", "eq18_upper", 0.75) == pytest.approx(3.26, abs=0.02)

    def test_refined_vs_algebraic_upper(self):
        assert crossover("eq24_upper", "eq18_upper", 2.5) == pytest.approx(8.42, abs=0.02)
        # verified single exchange point at order one (4.907, not the
        # published 5.34, which corresponds to order ~1.19)
        assert crossover("eq24_upper", "eq18_upper", 1.0) == pytest.approx(4.907, abs=0.01)

    def test_large_order_scale(self):
        got = crossover("eq24_upper", "eq18_upper", 5.0)
        assert got == pytest.approx(14.9, abs=0.1)
        assert got == pytest.approx(2.0 * math.sqrt(5.0 * 11.0), abs=0.2)

    def test_no_sign_change(self):
        # above order 3/2 the algebraic upper bound stays below tanh(x/2)
        with pytest.raises(NoSignChange):
            crossover("eq20_upper", "eq18_upper", 3.0)

    def test_multiple_sign_changes(self):
        REGISTRY["fake_osc"] = BoundSpec(
            "fake_osc", "b_kernel", "upper", -1.5, True,
            lambda n, x, cfg=None: math.sin(x))
        REGISTRY["fake_zero"] = BoundSpec(
            "fake_zero", "b_kernel", "upper", -1.5, True,
            lambda n, x, cfg=None: 0.0)
        try:
            with pytest.raises(MultipleSignChanges):
                crossover("fake_osc", "fake_zero", 0.0, (0.1, 20.0))
        finally:
            del REGISTRY["fake_osc"]
            del REGISTRY["fake_zero"]


class TestMonotonicitySuite:
    def test_all_reports_clean(self):
        reports = monotonicity_suite()
        names = {r.bound_id for r in reports}
        assert names == {"mono_b_decreasing_in_x", "mono_b_increasing_in_nu",
                         "mono_succ_ratio_decreasing_in_nu", "turan_product",
                         "m_ratio_dominates_bessel_ratio", "recurrence_residuals"}
        for rep in reports:
            assert rep.clean, rep.bound_id
            assert rep.points_checked > 100


class TestDefaultGrid:
    def test_shape(self):
        g = default_grid()
        assert len(g.nu_values) == 14
        assert len(g.x_values) == 60
        assert g.x_values[0] == pytest.approx(1e-3)
        assert g.x_values[-1] == pytest.approx(50.0)

    def test_y_rule_caps_at_sixty(self):
        g = default_grid()
        assert g.y_values(50.0) == [60.0]
        assert g.y_values(1.0) == [1.5, 3.0, 10.0]

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Grid((1.0, 0.5), (1.0, 2.0))
