"""Metric coefficient profiles (alpha^2, beta^2, gamma^2) in a chosen chart.

The metric is ``alpha2 * dy^2 + beta2 * theta^2 + gamma2 * g_CP`` where y is
the chart variable; outside chart R the Jacobian of the chart change is
absorbed into alpha2.
"""

from dataclasses import dataclass, replace

from ..exactcore import RatFn, to_json
from .charts import Chart, check_pairing, chart_of_r, even_to_sigma, r_of
from .params import MetricParams
from .polynomials import compute_P


@dataclass(frozen=True)
class MetricProfile:
    params: MetricParams
    chart: Chart
    alpha2: RatFn
    beta2: RatFn
    gamma2: RatFn

    @property
    def triple(self):
        return (self.alpha2, self.beta2, self.gamma2)

    @property
    def var(self):
        return self.chart.var

    def specialize(self, c):
        """Concrete-c profile from a formal one (u -> 1/c or w -> sqrt(c))."""
        if not self.params.is_formal:
            raise ValueError("profile is already concrete")
        new = self.params.with_c(c)
        value = new.u if self.params.c_mode == "formal_u" else new.w
        return MetricProfile(new, self.chart, *(f.specialize(value) for f in self.triple))

    def evaluate(self, y):
        return tuple(f.evaluate(y) for f in self.triple)

    def with_triple(self, alpha2=None, beta2=None, gamma2=None):
        return replace(
            self,
            alpha2=self.alpha2 if alpha2 is None else alpha2,
            beta2=self.beta2 if beta2 is None else beta2,
            gamma2=self.gamma2 if gamma2 is None else gamma2,
        )

    def __eq__(self, other):
        if not isinstance(other, MetricProfile):
            return NotImplemented
        return (
            self.params == other.params
            and self.chart == other.chart
            and self.triple == other.triple
        )

    __hash__ = None

    def to_json(self):
        return {
            "n": self.params.n,
            "c": self.params.label(),
            "chart": self.chart.value,
            "var": self.var,
            "alpha2": to_json(self.alpha2),
            "beta2": to_json(self.beta2),
            "gamma2": to_json(self.gamma2),
        }


def r_chart_profile(params):
    n = params.n
    F = params.field
    r = RatFn.gen("r", F)
    P = RatFn(compute_P(n, params))
    c = F.convert(params.c)
    base = r**2 - 1
    return MetricProfile(
        params,
        Chart.R,
        alpha2=base ** (n - 1) / P,
        beta2=c**2 * base ** (1 - n) * P,
        gamma2=c * base,
    )


def transport(profile, chart):
    """Move an R-chart profile to ``chart`` (alpha2 picks up (dr/dy)^2)."""
    if profile.chart is not Chart.R:
        profile = to_r_chart(profile)
    chart = check_pairing(chart, profile.params)
    if chart is Chart.R:
        return profile
    phi = r_of(chart, profile.params)
    jac = phi.derivative()
    a, b, g = (f.substitute(phi) for f in profile.triple)
    return MetricProfile(profile.params, chart, a * jac**2, b, g)


def to_r_chart(profile):
    """Inverse of :func:`transport`."""
    chart = profile.chart
    params = profile.params
    if chart is Chart.R:
        return profile
    if chart is Chart.RHO:
        jac2 = r_of(Chart.RHO, params).derivative() ** 2
        sigma = chart_of_r(Chart.RHO, params)
        a = even_to_sigma(profile.alpha2 / jac2).substitute(sigma)
        b = even_to_sigma(profile.beta2).substitute(sigma)
        g = even_to_sigma(profile.gamma2).substitute(sigma)
        return MetricProfile(params, Chart.R, a, b, g)
    psi = chart_of_r(chart, params)
    jac = psi.derivative()
    a, b, g = (f.substitute(psi) for f in profile.triple)
    return MetricProfile(params, Chart.R, a * jac**2, b, g)


def metric_profile(params, chart=Chart.R):
    """The profile of g_c in ``chart``:

    alpha^2 = (r^2-1)^(n-1)/P_n,  beta^2 = c^2 (r^2-1)^(1-n) P_n,  gamma^2 = c (r^2-1).
    """
    chart = check_pairing(chart, params)
    return transport(r_chart_profile(params), chart)
