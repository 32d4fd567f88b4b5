"""Limit constants and the reference metrics the family is compared against.

Every reference metric is stored as a coefficient triple in the same layout
as a MetricProfile: ``A dy^2 + B theta^2 + G g_CP``.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..exactcore import QU, RatFn, to_json
from ..pagepope import Chart

KINDS = ("hyperbolic", "complex_hyperbolic", "g_infinity", "g_zero", "pedersen")


@dataclass(frozen=True)
class LimitConstants:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")

    @property
    def a_n(self):
        return Fraction(3 * (self.n - 1), self.n + 1)

    @property
    def b_n(self):
        return Fraction(2 * self.n, 2 * self.n - 3)

    @property
    def scale(self):
        return Fraction(self.n + 1, 2 * self.n - 1)

    def to_json(self):
        return {"n": self.n, "a_n": str(self.a_n), "b_n": str(self.b_n), "scale": str(self.scale)}


@dataclass(frozen=True)
class ReferenceMetric:
    kind: str
    chart: Chart
    alpha2: RatFn
    beta2: RatFn
    gamma2: RatFn
    n: int = None

    @property
    def triple(self):
        return (self.alpha2, self.beta2, self.gamma2)

    def evaluate(self, y):
        return tuple(f.evaluate(y) for f in self.triple)

    def to_json(self):
        return {
            "kind": self.kind,
            "chart": self.chart.value,
            "n": self.n,
            "alpha2": to_json(self.alpha2),
            "beta2": to_json(self.beta2),
            "gamma2": to_json(self.gamma2),
        }


def _conformal(rho):
    return 4 / (1 - rho**2) ** 2


def hyperbolic(n=None, chart="RHO"):
    chart = Chart.parse(chart)
    if chart is Chart.R:
        r = RatFn.gen("r")
        return ReferenceMetric("hyperbolic", chart, 1 / (r**2 - 1), r**2 - 1, r**2 - 1, n)
    if chart is not Chart.RHO:
        raise ValueError("hyperbolic reference is provided in charts R and RHO")
    rho = RatFn.gen("rho")
    k = _conformal(rho)
    return ReferenceMetric("hyperbolic", chart, k, k * rho**2, k * rho**2, n)


def complex_hyperbolic(n=None, var="rho"):
    """``2((drho^2 + rho^2 theta^2)/(1-rho^2)^2 + rho^2 g_CP/(1-rho^2))``; Ric = -(n+1) g."""
    rho = RatFn.gen(var)
    q = 1 - rho**2
    return ReferenceMetric("complex_hyperbolic", Chart.RHO, 2 / q**2, 2 * rho**2 / q**2, 2 * rho**2 / q, n)


def g_infinity(n):
    a = LimitConstants(n).a_n
    rho = RatFn.gen("rho")
    k = _conformal(rho)
    lead = 1 + a * rho**2
    return ReferenceMetric(
        "g_infinity", Chart.RHO, k / lead, k * rho**2 * lead, k * rho**2 * (1 - rho**2), n
    )


def g_zero(n):
    """Collapsed limit ``dt^2/(t^2+b_n) + t^2 g_CP``; the zero beta slot is the collapsed fibre."""
    b = LimitConstants(n).b_n
    t = RatFn.gen("t")
    return ReferenceMetric("g_zero", Chart.T, 1 / (t**2 + b), RatFn.constant(0, "t"), t**2, n)


def pedersen(m2=None):
    """Pedersen's n=2 family; formal over Q(u) with m^2 = u - 1 unless ``m2`` is given (m^2 > -1)."""
    if m2 is None:
        rho = RatFn.gen("rho", QU)
        m2 = QU.gen() - 1
    else:
        m2 = Fraction(m2)
        if m2 <= -1:
            raise ValueError("Pedersen metrics need m^2 > -1")
        rho = RatFn.gen("rho")
    k = 4 / (1 - rho**2) ** 2
    p2 = 1 + m2 * rho**2
    p4 = 1 + m2 * rho**4
    return ReferenceMetric("pedersen", Chart.RHO, k * p2 / p4, k * rho**2 * p4 / p2, k * rho**2 * p2, 2)


def reference_metric(kind, n=None):
    if kind == "hyperbolic":
        return hyperbolic(n)
    if kind == "complex_hyperbolic":
        return complex_hyperbolic(n)
    if kind == "g_infinity":
        return g_infinity(n)
    if kind == "g_zero":
        return g_zero(n)
    if kind == "pedersen":
        return pedersen()
    raise ValueError(f"unknown reference metric {kind!r}; expected one of {', '.join(KINDS)}")


__all__ = [
    "KINDS",
    "LimitConstants",
    "ReferenceMetric",
    "complex_hyperbolic",
    "g_infinity",
    "g_zero",
    "hyperbolic",
    "pedersen",
    "reference_metric",
]
