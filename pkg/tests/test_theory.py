"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_theory.py
@DateTime: 2025-07-14
@Docs: 闭式总体量与逆映射
"""

import math

import pytest

from app.core.exceptions import OutOfRange
from app.theory.closed_form import (
    ModelKind,
    classify_model,
    dcbm_population,
    lcd_rho_asymptote,
    m_of_rho,
    r_of_rho,
    rho_of_r,
)


class TestRhoOfR:
    @pytest.mark.parametrize(
        ("r", "k", "expected"),
        [(10.0, 3, 1.84375), (4.0, 3, 1.25), (1.0, 3, 1.0), (1.0, 5, 1.0)],
    )
    def test_known_values(self, r, k, expected):
        assert rho_of_r(r, k) == pytest.approx(expected, rel=1e-14)

    def test_two_thirds_ratio(self):
        assert rho_of_r(20.0 / 3.0, 3) == pytest.approx(1.559, abs=5e-4)

    def test_strictly_increasing_towards_k(self):
        values = [rho_of_r(r, 4) for r in (1.0, 2.0, 5.0, 50.0, 1e4)]
        assert values == sorted(values)
        assert values[-1] < 4.0

    @pytest.mark.parametrize(("r", "k"), [(0.0, 3), (-1.0, 3), (2.0, 1)])
    def test_invalid_arguments(self, r, k):
        with pytest.raises(ValueError):
            rho_of_r(r, k)


class TestROfRho:
    def test_inverts_known_value(self):
        assert r_of_rho(1.84375, 3) == pytest.approx(10.0, rel=1e-9)

    @pytest.mark.parametrize("r", [1.01, 1.5, 3.0, 20.0, 400.0])
    def test_round_trip(self, r):
        assert r_of_rho(rho_of_r(r, 3), 3) == pytest.approx(r, rel=1e-7)

    def test_lower_boundary(self):
        with pytest.raises(OutOfRange) as info:
            r_of_rho(1.0, 3)
        assert info.value.boundary == 1.0

    def test_upper_boundary(self):
        with pytest.raises(OutOfRange) as info:
            r_of_rho(3.0, 3)
        assert math.isinf(info.value.boundary)


class TestLcd:
    @pytest.mark.parametrize(("m", "expected"), [(1, 0.0), (2, 1.0 / 6.0), (3, 0.28125), (5, 60.0 / 144.0)])
    def test_asymptote(self, m, expected):
        assert lcd_rho_asymptote(m) == pytest.approx(expected, rel=1e-14)

    def test_asymptote_approaches_three_quarters(self):
        assert lcd_rho_asymptote(10_000) == pytest.approx(0.75, abs=1e-3)

    @pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
    def test_m_of_rho_inverts_asymptote(self, m):
        assert m_of_rho(lcd_rho_asymptote(m)) == m

    def test_m_of_rho_picks_nearest(self):
        assert m_of_rho(0.2) == 2
        assert m_of_rho(0.27) == 3

    @pytest.mark.parametrize("rho", [-0.1, 0.75, 1.2])
    def test_m_of_rho_out_of_range(self, rho):
        with pytest.raises(OutOfRange):
            m_of_rho(rho)


class TestPopulation:
    def test_rho_depends_only_on_ratio(self):
        a = dcbm_population(0.1, 0.01, 3)
        b = dcbm_population(0.02, 0.002, 3)
        assert a.rho_pop == pytest.approx(b.rho_pop)
        assert a.rho_pop == pytest.approx(1.84375)

    def test_moment_identity(self):
        pop = dcbm_population(0.3, 0.1, 3)
        assert pop.rho_pop == pytest.approx(pop.t_pop * pop.e_pop**3 / pop.v_pop**3, rel=1e-12)
        assert pop.cc_pop == pytest.approx(3 * pop.t_pop / pop.v_pop, rel=1e-12)

    def test_er_case(self):
        pop = dcbm_population(0.2, 0.2, 4)
        assert pop.rho_pop == pytest.approx(1.0)
        assert pop.cc_pop == pytest.approx(0.6)

    def test_requires_q_not_above_p(self):
        with pytest.raises(ValueError):
            dcbm_population(0.1, 0.2, 3)


class TestClassify:
    @pytest.mark.parametrize(
        ("rho", "kind"),
        [
            (0.0, ModelKind.PREFERENTIAL_ATTACHMENT),
            (0.5, ModelKind.PREFERENTIAL_ATTACHMENT),
            (0.8, ModelKind.INDETERMINATE),
            (0.95, ModelKind.ERDOS_RENYI),
            (1.05, ModelKind.ERDOS_RENYI),
            (1.5, ModelKind.COMMUNITY_STRUCTURE),
            (None, ModelKind.INDETERMINATE),
        ],
    )
    def test_bands(self, rho, kind):
        assert classify_model(rho).kind == kind

    def test_custom_band(self):
        assert classify_model(1.15, er_band_halfwidth=0.2).kind == ModelKind.ERDOS_RENYI

    def test_invalid_band(self):
        with pytest.raises(ValueError):
            classify_model(1.0, er_band_halfwidth=0.3)
