"""Numeric convergence tables for the c -> infinity and c -> 0 limits.

Profiles are built exactly over Q(u) or Q(w). Only the evaluation at
u = 1/c (or w = sqrt(c)) and at grid points, together with the first two
chart derivatives, is done in mpmath at a fixed, explicit precision.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..exactcore import RatFn
from ..pagepope import Chart, MetricParams, metric_profile
from .constants import g_infinity, g_zero
from .identities import (
    collapse_identity,
    extract_p_leading,
    fiber_bound,
    infinity_limit_identity,
    normalization_identity,
    zero_limit_identity,
)

CSV_COLUMNS = ("c", "sup_alpha", "sup_beta_or_fiber", "sup_gamma")
DEFAULT_C_INF = tuple(Fraction(10) ** k for k in range(1, 5))
DEFAULT_C_ZERO = tuple(Fraction(1, 10**k) for k in range(1, 5))
DEFAULT_POINTS = 50


class GridError(ValueError):
    pass


def uniform_grid(lo, hi, count=DEFAULT_POINTS):
    lo, hi = Fraction(lo), Fraction(hi)
    if count < 2 or not lo < hi:
        raise GridError(f"bad grid [{lo}, {hi}] x {count}")
    return tuple(lo + (hi - lo) * i / (count - 1) for i in range(count))


def _mp(q):
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def _coeff_mp(c, param):
    if isinstance(c, Fraction):
        return _mp(c)
    return _poly_mp(c.num, param) / _poly_mp(c.den, param)


def _poly_mp(p, x, param=None):
    return mpmath.fsum(_coeff_mp(c, param) * x**e for e, c in p.items())


def mp_eval(f, x, param=None):
    """Evaluate a RatFn (coefficients in Q, Q(u) or Q(w)) at mp values of var and parameter."""
    return _poly_mp(f.num, x, param) / _poly_mp(f.den, x, param)


def _decades(c1, c2):
    return abs(math.log10(Fraction(c1) / Fraction(c2)))


def _fmt(v, digits=12):
    return mpmath.nstr(v, digits)


def _c_text(c):
    return f"{float(Fraction(c)):g}"


@dataclass(frozen=True)
class LimitTable:
    kind: str
    n: int
    rows: tuple
    checks: tuple
    precision: int
    meta: dict = field(default_factory=dict)

    def column(self, name):
        return [row[name] for row in self.rows]

    def sup_distance(self):
        return [max(row["sup_alpha"], row["sup_beta_or_fiber"], row["sup_gamma"]) for row in self.rows]

    def per_decade_ratios(self, name=None):
        """Successive ratios sup(c_i)/sup(c_{i+1}), normalized to one decade of c."""
        vals = self.sup_distance() if name is None else self.column(name)
        cs = self.column("c")
        out = []
        for (c1, v1), (c2, v2) in zip(zip(cs, vals), zip(cs[1:], vals[1:])):
            out.append((v1 / v2) ** (1 / mpmath.mpf(_decades(c1, c2))) if v2 else mpmath.inf)
        return out

    def decreasing(self, name=None):
        vals = self.sup_distance() if name is None else self.column(name)
        return all(a > b for a, b in zip(vals, vals[1:]))

    @property
    def monotone(self):
        if self.kind == "inf":
            return self.decreasing()
        return all(self.decreasing(k) for k in ("sup_alpha", "sup_beta_or_fiber", "sup_gamma"))

    @property
    def passed(self):
        return self.monotone and all(ch.passed for ch in self.checks)

    def to_csv(self):
        lines = [",".join(CSV_COLUMNS)]
        for row in self.rows:
            lines.append(",".join([_c_text(row["c"])] + [_fmt(row[k]) for k in CSV_COLUMNS[1:]]))
        return "\n".join(lines) + "\n"

    def to_json(self):
        rows = []
        for row in self.rows:
            rows.append(
                {
                    "c": str(row["c"]),
                    **{k: _fmt(row[k]) for k in CSV_COLUMNS[1:]},
                    "derivative_sups": {k: [_fmt(v) for v in vs] for k, vs in row["derivative_sups"].items()},
                }
            )
        return {
            "kind": self.kind,
            "n": self.n,
            "precision": self.precision,
            **self.meta,
            "rows": rows,
            "per_decade_ratios": [_fmt(v, 6) for v in self.per_decade_ratios()],
            "monotone": self.monotone,
            "checks": [ch.to_json() for ch in self.checks],
            "passed": self.passed,
        }


def _poly_jet(p, k):
    out = [p]
    for _ in range(k):
        out.append(out[-1].derivative())
    return out


def jet(f, x, param=None, k=2):
    """Values of f, f', ..., f^(k) (k <= 2) at x, via the quotient rule on num/den.

    Avoids building canonical derivative RatFns, which over Q(u) costs a gcd
    per step.
    """
    N = [_poly_mp(p, x, param) for p in _poly_jet(f.num, k)]
    D = [_poly_mp(p, x, param) for p in _poly_jet(f.den, k)]
    vals = [N[0] / D[0]]
    if k >= 1:
        vals.append((N[1] * D[0] - N[0] * D[1]) / D[0] ** 2)
    if k >= 2:
        # (N/D)'' = (N'' - 2 D' f' - D'' f) / D
        vals.append((N[2] - 2 * D[1] * vals[1] - D[2] * vals[0]) / D[0])
    return vals


def _dev_sups(f, g, xs, param, k):
    """sup_x |(f - g)^(j)(x)| for j = 0..k."""
    sups = [mpmath.mpf(0)] * (k + 1)
    for x in xs:
        a = jet(f, x, param, k)
        b = jet(g, x, None, k)
        sups = [max(s, abs(p - q)) for s, p, q in zip(sups, a, b)]
    return sups


def _check_c_list(c_list):
    cs = [Fraction(c) for c in c_list]
    if not cs or any(c <= 0 for c in cs):
        raise GridError("c values must be positive")
    return cs


def limit_infinity(n, grid=None, c_list=None, precision=40, derivatives=2):
    """sup_rho |profile_c - g_inf| per coefficient on a compact rho-grid, for each c."""
    grid = tuple(Fraction(x) for x in (grid if grid is not None else uniform_grid("0.1", "0.9")))
    if not grid or min(grid) <= 0 or max(grid) >= 1:
        raise GridError("rho-grid must lie inside (0, 1), away from both endpoints")
    cs = _check_c_list(c_list if c_list is not None else DEFAULT_C_INF)
    prof = metric_profile(MetricParams(n), Chart.RHO)
    ref = g_infinity(n)
    names = ("alpha", "beta", "gamma")
    rows = []
    with mpmath.workdps(precision):
        xs = [_mp(x) for x in grid]
        for c in cs:
            u = 1 / _mp(c)
            row = {"c": c}
            dsups = {}
            for name, col, f, g in zip(names, CSV_COLUMNS[1:], prof.triple, ref.triple):
                vals = _dev_sups(f, g, xs, u, derivatives)
                row[col] = vals[0]
                dsups[name] = vals[1:]
            row["derivative_sups"] = dsups
            rows.append(row)
    checks = (normalization_identity(n), infinity_limit_identity(n), extract_p_leading(n))
    meta = {"grid": {"min": str(min(grid)), "max": str(max(grid)), "points": len(grid)}}
    return LimitTable("inf", n, tuple(rows), checks, precision, meta)


def fiber_grid(R, points=DEFAULT_POINTS, depth=40):
    """Geometric points R 2^-k accumulating at 0 together with a uniform grid on (0, R]."""
    R = Fraction(R)
    pts = {R / 2**k for k in range(depth + 1)}
    pts.update(R * i / points for i in range(1, points + 1))
    return tuple(sorted(pts))


def limit_zero(n, R1="0.5", R2="2", R="5", c_list=None, precision=40, derivatives=2):
    """Collapse table in the T chart: base coefficients against g_zero and fibre diameter pi*beta."""
    R1, R2, R = Fraction(R1), Fraction(R2), Fraction(R)
    if not (0 < R1 < R2):
        raise GridError(f"need 0 < R1 < R2, got R1={R1}, R2={R2}")
    if R <= 0:
        raise GridError(f"need R > 0, got {R}")
    cs = _check_c_list(c_list if c_list is not None else DEFAULT_C_ZERO)
    prof = metric_profile(MetricParams(n, "formal_w"), Chart.T)
    ref = g_zero(n)
    beta2 = prof.beta2
    base = uniform_grid(R1, R2)
    fib = fiber_grid(R)
    rows = []
    with mpmath.workdps(precision):
        xs = [_mp(x) for x in base]
        ts = [_mp(x) for x in fib]
        for c in cs:
            w = mpmath.sqrt(_mp(c))
            da = _dev_sups(prof.alpha2, ref.alpha2, xs, w, derivatives)
            dg = _dev_sups(prof.gamma2, ref.gamma2, xs, w, derivatives)
            fiber = max(mpmath.pi * mpmath.sqrt(mp_eval(beta2, t, w)) for t in ts)
            rows.append(
                {
                    "c": c,
                    "sup_alpha": da[0],
                    "sup_beta_or_fiber": fiber,
                    "sup_gamma": dg[0],
                    "derivative_sups": {"alpha": da[1:], "gamma": dg[1:]},
                }
            )
    checks = (collapse_identity(n), zero_limit_identity(n), fiber_bound(n))
    meta = {
        "base_interval": [str(R1), str(R2)],
        "fiber_radius": str(R),
        "limit_metric": checks[1].details["limit_metric"],
    }
    return LimitTable("zero", n, tuple(rows), checks, precision, meta)


__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_C_INF",
    "DEFAULT_C_ZERO",
    "GridError",
    "LimitTable",
    "fiber_grid",
    "limit_infinity",
    "limit_zero",
    "jet",
    "mp_eval",
    "uniform_grid",
]
