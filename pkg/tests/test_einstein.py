import random
from fractions import Fraction

import mpmath
import pytest

from peforge.einstein import (
    PERTURBATIONS,
    ChartError,
    OracleError,
    implied_P,
    perturb,
    residual_anchor,
    residual_profile_P_ode,
    numeric_oracle_n2,
    oracle_convergence,
    residual_alpha_beta,
    residual_P_ode,
    residual_tangential,
    residual_transverse,
    ricci_diagonal,
)
from peforge.exactcore import QU, RatFn
from peforge.pagepope import MetricParams, compute_P, metric_profile

R = RatFn.gen("r", QU)
u = QU.gen()

# generic points away from eta = 0, pi/2 and the r = 1 end
ORACLE_POINTS = [
    (Fraction(2), 0.6, 0.3, 1.1),
    (Fraction(3, 2), 0.7, 0.2, 0.5),
    (Fraction(5, 2), 0.4, 1.7, 2.9),
    (Fraction(4), 1.1, 0.9, 0.1),
    (Fraction(7, 4), 0.9, 2.4, 1.3),
]


def random_radii(seed, count=10):
    rng = random.Random(seed)
    return [1 + Fraction(rng.randint(1, 49_000), 1000) for _ in range(count)]


class TestResiduals:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_all_vanish_over_Qu(self, n):
        p = metric_profile(MetricParams(n))
        assert residual_transverse(p).is_zero
        assert residual_tangential(p).is_zero
        assert residual_alpha_beta(p).is_zero
        assert residual_P_ode(n).is_zero

    def test_transverse_spot_value(self):
        p = metric_profile(MetricParams(2, 1))
        G = p.gamma2
        r0 = Fraction(3, 2)
        g = G.evaluate(r0)
        lhs = (G.derivative().derivative().evaluate(r0) * g - G.derivative().evaluate(r0) ** 2 / 2) / 2
        assert lhs + 1 == 0

    def test_perturbed_gamma_is_caught(self):
        p = metric_profile(MetricParams(3))
        bad = p.with_triple(p.alpha2, p.beta2, p.gamma2 + R)
        rep = residual_transverse(bad)
        assert not rep.is_zero
        assert rep.to_json()["is_zero"] is False

    def test_perturbed_beta_is_caught(self):
        p = metric_profile(MetricParams(2))
        bad = p.with_triple(p.alpha2, p.beta2 + R / 7, p.gamma2)
        assert not residual_tangential(bad).is_zero

    def test_wrong_chart(self):
        p = metric_profile(MetricParams(2), "RHO")
        with pytest.raises(ChartError):
            residual_transverse(p)
        with pytest.raises(ChartError):
            residual_tangential(p)

    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_tangential_terms_numeric_oracle(self, n):
        # term by term at (r, c) = (2, 3), 50 digits, no RatFn algebra
        with mpmath.workdps(50):
            c = mpmath.mpf(3)
            P = compute_P(n, MetricParams(n, 3))

            def beta2(x):
                return c**2 * (x**2 - 1) ** (1 - n) * P.evaluate(x)

            x = mpmath.mpf(2)
            B = beta2(x)
            dB = mpmath.diff(beta2, x)
            lam, Lam = 2 * n, -(2 * n - 1)
            total = -B - (2 * n - 3) * x**2 * B - x * (x**2 - 1) * dB
            total += lam * c * (x**2 - 1) - Lam * c**2 * (x**2 - 1) ** 2
            assert abs(total) < mpmath.mpf(10) ** -40


class TestNegativeControls:
    @pytest.mark.parametrize("n", [2, 4])
    def test_implied_P_round_trip(self, n):
        p = metric_profile(MetricParams(n))
        assert implied_P(p) == RatFn(compute_P(n))
        assert residual_anchor(p).is_zero and residual_profile_P_ode(p).is_zero

    @pytest.mark.parametrize("amount", [Fraction(1, 5), Fraction(-3), Fraction(7, 2)])
    def test_integration_constant_only_moves_anchor(self, amount):
        # P + K r solves the same first-order ODE and keeps alpha^2 beta^2 = c^2
        bad = perturb(metric_profile(MetricParams(3)), "P-constant", amount)
        assert residual_transverse(bad).is_zero
        assert residual_tangential(bad).is_zero
        assert residual_alpha_beta(bad).is_zero
        assert residual_profile_P_ode(bad).is_zero
        assert residual_anchor(bad).residual.constant_value() == amount

    def test_integration_constant_still_einstein(self):
        bad = perturb(metric_profile(MetricParams(2, 1)), "P-constant")
        rd = ricci_diagonal(bad, Fraction(5, 2))
        assert rd.max_deviation(-3) < 1e-30

    @pytest.mark.parametrize("kind", PERTURBATIONS)
    def test_some_check_fails(self, kind):
        bad = perturb(metric_profile(MetricParams(2)), kind)
        checks = [residual_transverse, residual_tangential, residual_alpha_beta, residual_profile_P_ode, residual_anchor]
        assert not all(f(bad).is_zero for f in checks)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            perturb(metric_profile(MetricParams(2)), "alpha")
        with pytest.raises(ValueError):
            perturb(metric_profile(MetricParams(2), "RHO"), "gamma")


class TestRicciDiagonal:
    def test_hyperbolic(self):
        rd = ricci_diagonal(metric_profile(MetricParams(2, 1)), 2)
        assert rd.components() == (-3, -3, -3)

    def test_n3_half(self):
        rd = ricci_diagonal(metric_profile(MetricParams(3, Fraction(1, 2))), 3)
        assert rd.max_deviation(-5) < mpmath.mpf(10) ** -30

    @pytest.mark.parametrize("n", [2, 3, 5])
    @pytest.mark.parametrize("c", [Fraction(1, 10), 1, 10])
    def test_random_radii(self, n, c):
        p = metric_profile(MetricParams(n, c))
        for r0 in random_radii(1000 * n + int(c * 10)):
            rd = ricci_diagonal(p, r0, precision=40)
            assert rd.max_deviation(-(2 * n - 1)) < 1e-25
            assert abs(rd.R00 - rd.R11) < 1e-25

    def test_doubled_beta_fails(self):
        p = metric_profile(MetricParams(2, 1))
        bad = p.with_triple(p.alpha2, 2 * p.beta2, p.gamma2)
        rd = ricci_diagonal(bad, 2)
        assert rd.max_deviation(-3) > 0.1

    def test_domain(self):
        p = metric_profile(MetricParams(2, 1))
        with pytest.raises(ValueError):
            ricci_diagonal(p, 1)
        with pytest.raises(ValueError):
            ricci_diagonal(metric_profile(MetricParams(2)), 2)
        with pytest.raises(ChartError):
            ricci_diagonal(metric_profile(MetricParams(2, 1), "S"), 2)


class TestFiniteDifferenceOracle:
    @pytest.mark.parametrize("c", [1, 2])
    @pytest.mark.parametrize("point", ORACLE_POINTS)
    def test_einstein_and_diagonal(self, c, point):
        res = numeric_oracle_n2(c, point)
        assert all(abs(v + 3) < 1e-5 for v in res.components())
        assert res.offdiag_max < 1e-5

    def test_cross_validates_closed_form(self):
        point = (Fraction(3, 2), 0.8, 0.4, 2.0)
        res = numeric_oracle_n2(2, point)
        rd = ricci_diagonal(metric_profile(MetricParams(2, 2)), Fraction(3, 2))
        for a, b in zip(res.components(), rd.components()):
            assert abs(a - b) < 1e-5

    @pytest.mark.parametrize("c", [1, 2])
    def test_second_order_convergence(self, c):
        cv = oracle_convergence(c, ORACLE_POINTS[2])
        assert cv["order"] >= 1.8

    def test_detects_doubled_beta(self):
        # the oracle sees the metric, so a corrupted closed form would disagree with it
        bad = metric_profile(MetricParams(2, 1))
        bad = bad.with_triple(bad.alpha2, 2 * bad.beta2, bad.gamma2)
        res = numeric_oracle_n2(1, ORACLE_POINTS[0])
        assert abs(ricci_diagonal(bad, 2).R11 - res.R11) > 0.1

    def test_oracle_sees_supplied_profile(self):
        good = metric_profile(MetricParams(2, 1))
        bad = perturb(good, "gamma")
        res = numeric_oracle_n2(1, ORACLE_POINTS[0], profile=bad)
        rd = ricci_diagonal(bad, ORACLE_POINTS[0][0])
        assert max(abs(v + 3) for v in res.components()) > 0.1
        assert all(abs(a - b) < 1e-5 for a, b in zip(res.components(), rd.components()))

    @pytest.mark.parametrize(
        "point,h",
        [
            ((2, 0.6, 0.1, 0.1), 0.5),
            ((2, 0.6, 0.1, 0.1), 1e-9),
            ((2, 0.01, 0.1, 0.1), 1e-4),
            ((2, 1.56, 0.1, 0.1), 1e-4),
            ((Fraction(10001, 10000), 0.6, 0.1, 0.1), 1e-4),
        ],
    )
    def test_rejects_bad_inputs(self, point, h):
        with pytest.raises(OracleError):
            numeric_oracle_n2(1, point, h=h)

    def test_low_precision_rejected(self):
        with pytest.raises(OracleError):
            numeric_oracle_n2(1, ORACLE_POINTS[0], h=1e-6, precision=15)
