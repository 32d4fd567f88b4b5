"""Radial charts and their transition maps to the r coordinate.

    R    r in (1, inf)
    S    s = r - 1
    RHO  s = 2u rho^2 / (1 - rho^2),  rho in (0, 1)
    T    s = t / w,  i.e. r = 1 + c^(-1/2) t
    X    x = 1/r
"""

from enum import Enum

from ..exactcore import RatFn
from .params import FORMAL_U, FORMAL_W, ConfigError


class Chart(str, Enum):
    R = "R"
    S = "S"
    RHO = "RHO"
    T = "T"
    X = "X"

    @property
    def var(self):
        return {"R": "r", "S": "s", "RHO": "rho", "T": "t", "X": "x"}[self.value]

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).upper())
        except ValueError:
            raise ConfigError(f"unknown chart {name!r}; expected one of R, S, RHO, T, X") from None


def check_pairing(chart, params):
    chart = Chart.parse(chart)
    if chart is Chart.T and params.c_mode == FORMAL_U:
        raise ConfigError("chart T needs c_mode formal_w or a concrete c")
    if chart is Chart.RHO and params.c_mode == FORMAL_W:
        raise ConfigError("chart RHO needs c_mode formal_u or a concrete c")
    if chart is Chart.T:
        params.w  # raises for concrete non-square c
    return chart


def r_of(chart, params):
    """The transition ``r = phi(y)`` as a RatFn in the chart variable."""
    chart = check_pairing(chart, params)
    F = params.field
    y = RatFn.gen(chart.var, F)
    if chart is Chart.R:
        return y
    if chart is Chart.S:
        return y + 1
    if chart is Chart.RHO:
        return 1 + 2 * F.convert(params.u) * y**2 / (1 - y**2)
    if chart is Chart.T:
        return 1 + y / F.convert(params.w)
    return 1 / y


def chart_of_r(chart, params):
    """Inverse transition as a RatFn in r.

    For RHO the inverse is only rational in rho^2, so this returns
    ``sigma = rho^2 = s / (s + 2u)``.
    """
    chart = check_pairing(chart, params)
    F = params.field
    r = RatFn.gen("r", F)
    if chart is Chart.R:
        return r
    if chart is Chart.S:
        return r - 1
    if chart is Chart.RHO:
        return (r - 1) / (r - 1 + 2 * F.convert(params.u))
    if chart is Chart.T:
        return F.convert(params.w) * (r - 1)
    return 1 / r


def even_to_sigma(f, var="sigma"):
    """Write an even RatFn f(rho) as g(sigma) with sigma = rho^2."""
    from ..exactcore import LaurentPoly

    def halve(p):
        if any(e % 2 for e in p.terms):
            raise ValueError(f"{f} is not even in {f.var}")
        return LaurentPoly({e // 2: c for e, c in p.items()}, var, p.field)

    return RatFn(halve(f.num), halve(f.den))


def sigma_to_even(g, var="rho"):
    from ..exactcore import LaurentPoly

    def double(p):
        return LaurentPoly({2 * e: c for e, c in p.items()}, var, p.field)

    return RatFn(double(g.num), double(g.den))
