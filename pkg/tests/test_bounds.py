import math

import numpy as np
import pytest

from wthi.bounds import (
    BoundKind,
    bound_best,
    bound_main_channel,
    bound_sato,
    bound_z_channel,
    sato_minimize,
    sato_objective,
)
from wthi.errors import DomainError
from wthi.gaussian import GaussianWthi, PowerAllocation, rate_achievable
from wthi.power import optimal_power

from oracles import half_log2, sato_grid


def random_draw(rng):
    return (
        rng.uniform(0.05, 5.0),
        rng.uniform(0.05, 5.0),
        rng.uniform(0.0, 50.0),
        rng.uniform(0.0, 50.0),
    )


class TestMainChannelBound:
    def test_values(self):
        assert bound_main_channel(GaussianWthi(1.0, 1.0, 0.0, 3.0)) == 0.0
        assert bound_main_channel(GaussianWthi(1.0, 1.0, 3.0, 0.0)) == pytest.approx(1.0)
        assert bound_main_channel(GaussianWthi(0.3, 2.0, 10.0, 1.0)) == pytest.approx(
            half_log2(11), abs=1e-14
        )


class TestSatoObjective:
    def test_zero_powers_vanish_for_any_rho(self):
        ch = GaussianWthi(1.3, 0.4, 0.0, 0.0)
        for rho in (-0.9, -0.2, 0.0, 0.55):
            assert sato_objective(ch, PowerAllocation(0.0, 0.0), rho) == pytest.approx(
                0.0, abs=1e-12
            )

    def test_hand_computed_value(self):
        # a = b = 1, p1 = p2 = 1, rho = 0: (3*3 - 4) / (1*3) = 5/3
        ch = GaussianWthi(1.0, 1.0, 1.0, 1.0)
        got = sato_objective(ch, PowerAllocation(1.0, 1.0), 0.0)
        assert got == pytest.approx(half_log2(5, 3), abs=1e-14)

    def test_midpoint_convexity_probe(self):
        ch = GaussianWthi(0.5, 10.0, 10.0, 10.0)
        alloc = PowerAllocation(10.0, 10.0)
        f = [sato_objective(ch, alloc, r) for r in (-0.5, 0.0, 0.5)]
        assert f[1] <= 0.5 * (f[0] + f[2]) + 1e-12

    @pytest.mark.parametrize("rho", [-1.0, 1.0, 1.5, math.nan])
    def test_rejects_rho_outside_open_interval(self, rho):
        ch = GaussianWthi(1.0, 1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            sato_objective(ch, PowerAllocation(1.0, 1.0), rho)


class TestSatoMinimize:
    def test_degenerate_zero_power(self):
        ev = sato_minimize(GaussianWthi(1.0, 1.0, 0.0, 0.0), PowerAllocation(0.0, 0.0))
        assert ev.degenerate
        assert ev.value == 0.0
        assert ev.rho_star == 0.0

    def test_minimizer_matches_dense_grid(self):
        ch = GaussianWthi(0.5, 10.0, 10.0, 10.0)
        ev = sato_minimize(ch, PowerAllocation(10.0, 10.0))
        rho, f = sato_grid(0.5, 10.0, 10.0, 10.0, points=100001)
        assert abs(ev.rho_star - rho[int(np.argmin(f))]) < 1e-4

    def test_dominates_achievable_in_degraded_case(self):
        ch = GaussianWthi(0.5, 2.0, 10.0, 10.0)
        assert ch.degraded()
        ev = sato_minimize(ch, PowerAllocation(10.0, 10.0))
        rate, _ = rate_achievable(ch, PowerAllocation(10.0, 10.0))
        assert ev.value >= rate - 1e-12

    def test_value_equals_objective_at_minimizer(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            a, b, p1, p2 = random_draw(rng)
            ch = GaussianWthi(a, b, p1, p2)
            ev = sato_minimize(ch, PowerAllocation(p1, p2))
            if ev.degenerate or ev.rho_star > 1.0 - 1e-9:
                continue
            assert ev.value == pytest.approx(
                sato_objective(ch, PowerAllocation(p1, p2), ev.rho_star), abs=1e-10
            )

    def test_symmetric_unit_gains_collapse_to_zero(self):
        # rho* sits at the edge of the interval; the stable form stays finite
        ev = sato_minimize(GaussianWthi(1.0, 1.0, 5.0, 7.0), PowerAllocation(5.0, 7.0))
        assert ev.value == pytest.approx(0.0, abs=1e-9)

    def test_convexity_and_argmin_sampled(self):
        rng = np.random.default_rng(23)
        for _ in range(30):
            a, b, p1, p2 = random_draw(rng)
            ch = GaussianWthi(a, b, p1, p2)
            ev = sato_minimize(ch, PowerAllocation(p1, p2))
            rho, f = sato_grid(a, b, p1, p2, points=1001)
            mid = 0.5 * (f[:-2] + f[2:]) - f[1:-1]
            assert float(mid.min()) >= -1e-9
            if not ev.degenerate:
                assert abs(ev.rho_star - rho[int(np.argmin(f))]) <= rho[1] - rho[0] + 1e-12

    def test_monotone_in_both_powers_at_fixed_rho(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            a, b = rng.uniform(0.05, 5.0, 2)
            rho = rng.uniform(-0.95, 0.95)
            p1, p2 = rng.uniform(0.0, 50.0, 2)
            ch = GaussianWthi(a, b, 200.0, 200.0)
            f0 = sato_objective(ch, PowerAllocation(p1, p2), rho)
            f1 = sato_objective(ch, PowerAllocation(p1 + 1.0, p2), rho)
            f2 = sato_objective(ch, PowerAllocation(p1, p2 + 1.0), rho)
            assert f1 >= f0 - 1e-12
            assert f2 >= f0 - 1e-12


class TestZChannelBound:
    def test_unit_gain_drops_wiretap_term(self):
        ch = GaussianWthi(1.0, 0.7, 6.0, 9.0)
        expected = half_log2(2 * 7 * 10, 17)
        assert bound_z_channel(ch) == pytest.approx(expected, abs=1e-14)

    def test_zero_everything(self):
        assert bound_z_channel(GaussianWthi(0.0, 0.0, 0.0, 0.0)) == pytest.approx(0.0)

    def test_epi_term_nonnegative(self):
        rng = np.random.default_rng(19)
        for _ in range(100):
            a, b, p1, p2 = random_draw(rng)
            ch = GaussianWthi(a, b, p1, p2)
            wiretap_term = max(
                0.0, 0.5 * (math.log2(1 + p1) - math.log2(1 + a * p1))
            )
            assert bound_z_channel(ch) >= wiretap_term - 1e-12


class TestBoundBest:
    def test_zero_power_ties_break_to_sato(self):
        value, kind = bound_best(GaussianWthi(1.0, 1.0, 0.0, 0.0))
        assert value == 0.0
        assert kind is BoundKind.SATO

    def test_sato_wins_when_eavesdropper_strong(self):
        _, kind = bound_best(GaussianWthi(2.0, 0.1, 10.0, 5.0))
        assert kind is BoundKind.SATO

    def test_z_channel_wins_in_mid_window(self):
        # between the Sato and main-channel crossovers of this geometry
        ch = GaussianWthi(0.5, 10.0, 10.0, 3.0)
        z = bound_z_channel(ch)
        assert z < bound_sato(ch)
        assert z < bound_main_channel(ch)
        _, kind = bound_best(ch)
        assert kind is BoundKind.Z_CHANNEL

    def test_dominates_achievable(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            a, b, p1m, p2m = random_draw(rng)
            ch = GaussianWthi(a, b, p1m, p2m)
            alloc, _ = optimal_power(ch)
            rate, _ = rate_achievable(ch, alloc)
            best, _ = bound_best(ch)
            assert rate <= best + 1e-9
