"""Exact identities behind smoothness, conformal compactness and the two limits.

All checks run over Q(u) or Q(w), so one pass covers every c at once.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactcore import QU, QW, LaurentPoly, PoleError, RatFn, clear_nested, series_expand
from ..pagepope import (
    Chart,
    MetricParams,
    compute_P,
    count_roots,
    even_to_sigma,
    in_s,
    metric_profile,
    r_of,
)
from ..pagepope.sturm import cauchy_bound
from .constants import LimitConstants, complex_hyperbolic, g_infinity, g_zero, hyperbolic, pedersen


class IdentityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class IdentityReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    payload: dict = field(default_factory=dict, compare=False, repr=False)

    def require(self):
        if not self.passed:
            raise IdentityError(f"{self.name} failed: {self.details}")
        return self

    def to_json(self):
        return {"name": self.name, "passed": self.passed, **self.details}


# -- expansion in the formal parameter ------------------------------------


def split_by_param(p):
    """``{j: p_j}`` with ``p = sum_j param^j p_j`` for p whose coefficients are polynomials in u or w."""
    buckets = {}
    for e, c in p.items():
        if not c.den.is_constant():
            raise ValueError(f"coefficient {c} is not polynomial in {c.var}")
        scale = c.den.leading_coeff
        for j, a in c.num.items():
            buckets.setdefault(j, {})[e] = a / scale
    return {j: LaurentPoly(t, p.var) for j, t in sorted(buckets.items())}


@dataclass(frozen=True)
class ParamLimit:
    """``f = limit + param^order * deviation + higher order`` as param -> 0."""

    limit: RatFn
    order: object
    deviation: RatFn
    denominators: tuple

    def regular_on(self, lo, hi):
        return all(roots_in_open(d, lo, hi) == 0 for d in self.denominators)


def _leading(f):
    num, den = clear_nested(f)
    sn, sd = split_by_param(num), split_by_param(den)
    vn, vd = min(sn), min(sd)
    return vn - vd, sn[vn], sd[vd]


def param_limit(f):
    """Limit of f as the coefficient-field generator (u or w) tends to 0."""
    if not f:
        zero = RatFn.constant(0, f.var)
        return ParamLimit(zero, math.inf, zero, ())
    v, ln, ld = _leading(f)
    if v < 0:
        raise IdentityError(f"{f} diverges like {f.field.var}^{v}")
    limit = RatFn(ln, ld) if v == 0 else RatFn.constant(0, f.var)
    dev = f - limit.change_field(f.field)
    if not dev:
        return ParamLimit(limit, math.inf, RatFn.constant(0, f.var), (ld,))
    order, dn, dd = _leading(dev)
    return ParamLimit(limit, order, RatFn(dn, dd), (ld, dd))


def roots_in_open(p, lo, hi=None):
    """Distinct real roots of a Q-polynomial in (lo, hi); ``hi=None`` means infinity."""
    if p.degree is None or p.degree <= 0:
        return 0
    p = p.shift(-p.low_degree) if p.low_degree > 0 and lo >= 0 else p
    if p.degree == 0:
        return 0
    if hi is None:
        hi = cauchy_bound(p) + 1
    return count_roots(p, Fraction(lo), Fraction(hi)) - (p.evaluate(Fraction(hi)) == 0)


# -- origin and boundary --------------------------------------------------


def origin_smoothness(n, order=8):
    if order < 4 or order % 2:
        raise ValueError(f"order must be even and >= 4, got {order}")
    prof = metric_profile(MetricParams(n), Chart.RHO)
    rho = RatFn.gen("rho", QU)
    fns = (prof.alpha2, prof.beta2 / rho**2, prof.gamma2 / rho**2)
    series = tuple(series_expand(f, 0, order) for f in fns)
    constants = tuple(s.coeff(0) for s in series)
    odd_zero = all(s.is_even() for s in series)
    passed = constants == (QU.convert(4),) * 3 and odd_zero
    return IdentityReport(
        "origin_smoothness",
        passed,
        {"n": n, "order": order, "constants": [str(c) for c in constants], "odd_coefficients_zero": odd_zero},
        {"series": series},
    )


def boundary_compactification(n, params=None):
    """Series in x = 1/r of (r^2 alpha^2, beta^2/r^2, gamma^2/r^2) and of beta^2/gamma^2."""
    params = params or MetricParams(n)
    prof = metric_profile(params, Chart.R)
    F = params.field
    r = RatFn.gen("r", F)
    c = F.convert(params.c)
    fns = (r**2 * prof.alpha2, prof.beta2 / r**2, prof.gamma2 / r**2)
    try:
        series = tuple(series_expand(f, "inf", 4) for f in fns)
        ratio = series_expand(prof.beta2 / prof.gamma2, "inf", 2)
    except PoleError as exc:
        raise IdentityError(f"boundary expansion has a pole of order {exc.order}") from exc
    limits = tuple(s.coeff(0) for s in series)
    expected = (F.one, c**2, c)
    passed = limits == expected and ratio.coeff(0) == c
    return IdentityReport(
        "boundary_compactification",
        passed,
        {
            "n": n,
            "c": params.label(),
            "limits": [str(v) for v in limits],
            "expected": [str(v) for v in expected],
            "berger_ratio": str(ratio.coeff(0)),
        },
        {"series": series, "ratio": ratio},
    )


# -- c -> infinity --------------------------------------------------------


def p_components(n):
    """``{j: p_j(rho)}`` with P_n(rho) = sum_j u^j p_j(rho), read off from P_n in s."""
    Ps = in_s(compute_P(n))
    rho = RatFn.gen("rho")
    X = 2 * rho**2 / (1 - rho**2)
    out = {}
    for k, coef in Ps.items():
        scale = coef.den.leading_coeff
        for j, a in coef.num.items():
            a = a / scale
            out[j + k] = out.get(j + k, RatFn.constant(0, "rho")) + a * X**k
    return {j: p for j, p in sorted(out.items()) if p}


def p_leading_formula(n):
    a = LimitConstants(n).a_n
    rho = RatFn.gen("rho")
    return 4 * rho**2 / (1 - rho**2) ** 2 * (4 * rho**2 / (1 - rho**2)) ** (n - 1) * (1 + a * rho**2)


def extract_p_leading(n):
    comps = p_components(n)
    formula = p_leading_formula(n)
    # recombine sum_j u^j p_j after clearing the common denominator (1 - rho^2)^(2n)
    u = QU.gen()
    rho = RatFn.gen("rho")
    clear = (1 - rho**2) ** (2 * n)
    recombined = LaurentPoly({}, "rho", QU)
    for j, p in comps.items():
        recombined = recombined + (p * clear).as_poly().change_field(QU).scale(u**j)
    in_rho = RatFn(compute_P(n)).substitute(r_of(Chart.RHO, MetricParams(n)))
    recombines = in_rho * clear.change_field(QU) == RatFn(recombined)
    lowest = min(comps)
    passed = comps.get(n + 1) == formula and lowest == n + 1 and max(comps) == 2 * n and recombines
    return IdentityReport(
        "p_leading",
        passed,
        {
            "n": n,
            "u_powers": [lowest, max(comps)],
            "p_leading": str(comps.get(n + 1)),
            "formula": str(formula),
            "recombines": recombines,
        },
        {"components": comps, "formula": formula},
    )


def infinity_limit_identity(n):
    """The RHO-chart profile tends to g_infinity as u -> 0, with O(u) deviation regular on (0, 1)."""
    prof = metric_profile(MetricParams(n), Chart.RHO)
    ref = g_infinity(n)
    lims = [param_limit(f) for f in prof.triple]
    match = all(L.limit == g for L, g in zip(lims, ref.triple))
    orders = [L.order for L in lims]
    regular = all(L.regular_on(0, 1) for L in lims)
    passed = match and all(o >= 1 for o in orders) and regular
    return IdentityReport(
        "g_infinity_limit",
        passed,
        {"n": n, "matches_g_infinity": match, "deviation_orders_in_u": orders, "regular_on_open_ball": regular},
        {"limits": lims},
    )


def _to_sigma_metric(ref):
    """Rewrite an even RHO-chart triple in sigma = rho^2, using d(rho)^2 = d(sigma)^2 / (4 sigma)."""
    sigma = RatFn.gen("sigma")
    a, b, g = (even_to_sigma(f) for f in ref.triple)
    return a / (4 * sigma), b, g


def normalization_identity(n):
    """Pull back g_CH along 1 - rt^2 = (1 - rho^2)/(1 + a_n rho^2) and compare with g_infinity.

    Works in sigma = rho^2 where the substitution is rational:
    sigma~ = (1 + a) sigma / (1 + a sigma).
    """
    const = LimitConstants(n)
    a = const.a_n
    sigma = RatFn.gen("sigma")
    st = (1 + a) * sigma / (1 + a * sigma)
    A_inf, B_inf, G_inf = _to_sigma_metric(g_infinity(n))
    A_ch, B_ch, G_ch = _to_sigma_metric(complex_hyperbolic(n))
    pulled = (A_ch.substitute(st) * st.derivative() ** 2, B_ch.substitute(st), G_ch.substitute(st))
    ratios = [f / g for f, g in zip((A_inf, B_inf, G_inf), pulled)]
    constant = all(q.is_constant() for q in ratios)
    values = [q.constant_value() if q.is_constant() else None for q in ratios]
    passed = constant and all(v == const.scale for v in values)
    factor = values[0] if constant and len(set(values)) == 1 else None
    return IdentityReport(
        "normalization",
        passed,
        {
            "n": n,
            "a_n": str(a),
            "ratios": [str(v) if v is not None else str(q) for v, q in zip(values, ratios)],
            "scale": str(const.scale),
            "line": f"g_inf = ({factor}) g_CH{n}" if factor is not None else f"g_inf != const * g_CH{n}",
        },
    )


# -- c -> 0 ---------------------------------------------------------------


@dataclass(frozen=True)
class CollapseDecomposition:
    """``P_n(1 + t/w) w^{2n} = leading + w * remainder`` over Q(w)."""

    n: int
    leading: LaurentPoly
    remainder: LaurentPoly
    exponents: tuple = ("-n", "-n+1/2")

    @property
    def remainder_is_polynomial_in_w(self):
        return all(c.den.is_constant() and c.num.is_polynomial() for _, c in self.remainder.items())

    def to_json(self):
        return {
            "n": self.n,
            "leading": str(self.leading),
            "remainder": str(self.remainder),
            "exponents_in_c": list(self.exponents),
            "remainder_polynomial_in_w": self.remainder_is_polynomial_in_w,
        }


def collapse_decomposition(n):
    params = MetricParams(n, "formal_w")
    w = QW.gen()
    b = LimitConstants(n).b_n
    Pt = RatFn(compute_P(n, params)).substitute(r_of(Chart.T, params))
    if not Pt.is_polynomial():
        raise IdentityError("P_n(1 + t/w) is not polynomial in t")
    scaled = Pt.as_poly().scale(w ** (2 * n))
    t = LaurentPoly.gen("t")
    leading = t ** (2 * n) + b * t ** (2 * n - 2)
    rest = scaled - leading.change_field(QW)
    remainder = rest.scale(1 / w)
    return CollapseDecomposition(n, leading, remainder)


def collapse_identity(n):
    dec = collapse_decomposition(n)
    return IdentityReport(
        "collapse_decomposition",
        dec.remainder_is_polynomial_in_w and dec.remainder.is_polynomial(),
        dec.to_json(),
        {"decomposition": dec},
    )


def limit_metric_text(n):
    b = LimitConstants(n).b_n
    return f"dt^2/(t^2+{b}) + t^2 g_CP{n - 1}"


def zero_limit_identity(n):
    """T-chart profile over Q(w): (alpha~^2, gamma^2) -> g_zero, beta^2 = O(w^2), regular on t > 0."""
    prof = metric_profile(MetricParams(n, "formal_w"), Chart.T)
    ref = g_zero(n)
    lims = [param_limit(f) for f in prof.triple]
    match = all(L.limit == g for L, g in zip(lims, ref.triple))
    orders = [L.order for L in lims]
    regular = all(L.regular_on(0, None) for L in lims)
    passed = match and orders[0] >= 1 and orders[1] >= 2 and orders[2] >= 1 and regular
    return IdentityReport(
        "g_zero_limit",
        passed,
        {
            "n": n,
            "limit_metric": limit_metric_text(n),
            "matches_g_zero": match,
            "deviation_orders_in_w": orders,
            "regular_for_t_positive": regular,
        },
        {"limits": lims},
    )


def fiber_bound(n, samples=200):
    """``s^k / (r^2-1)^(n-1) <= 2^(k-2(n-1))`` on s > 0 for k = n-1 .. 2n-2.

    Exact certificate: ``2^(k-2(n-1)) (s^2+2s)^(n-1) - s^k`` has nonnegative
    coefficients (it is the binomial expansion with one term removed).
    """
    s = LaurentPoly.gen("s")
    base = s**2 + 2 * s
    rows = []
    ok = True
    grid = [Fraction(2) ** Fraction(e, 1) for e in range(-20, 21)] + [Fraction(i, 10) for i in range(1, samples)]
    for k in range(n - 1, 2 * n - 1):
        bound = Fraction(2) ** (k - 2 * (n - 1))
        cert = base ** (n - 1) * bound - s**k
        nonneg = all(c >= 0 for _, c in cert.items())
        at_two = Fraction(2) ** k / Fraction(8) ** (n - 1)
        sampled = all(x**k / (x**2 + 2 * x) ** (n - 1) <= bound for x in grid)
        ok = ok and nonneg and at_two <= bound and sampled
        rows.append({"k": k, "bound": str(bound), "certificate_nonnegative": nonneg, "value_at_s_2": str(at_two)})
    return IdentityReport("fiber_bound", ok, {"n": n, "rows": rows})


# -- special members of the family ----------------------------------------


def pedersen_identity():
    params = MetricParams(2)
    u = QU.gen()
    m2 = u - 1
    rho = RatFn.gen("rho", QU)
    P_rho = RatFn(compute_P(2)).substitute(r_of(Chart.RHO, params))
    target = 16 * u**3 * rho**4 * (1 + m2 * rho**4) / (1 - rho**2) ** 4
    first = P_rho == target
    prof = metric_profile(params, Chart.RHO)
    ped = pedersen()
    second = prof.triple == ped.triple
    # m^2 = 1 is c = 1/2; compare at rho = 1/2 against the independently built Q-metric
    spot = metric_profile(MetricParams(2, Fraction(1, 2)), Chart.RHO).evaluate(Fraction(1, 2)) == pedersen(
        1
    ).evaluate(Fraction(1, 2))
    hyper = pedersen(0).triple == hyperbolic(2).triple
    return IdentityReport(
        "pedersen",
        first and second and spot and hyper,
        {"P2_in_rho": first, "profile_matches": second, "spot_u2_rho_half": spot, "m2_zero_is_hyperbolic": hyper},
    )


def hyperbolic_identity(n):
    params = MetricParams(n, 1)
    r = LaurentPoly.gen("r")
    P_ok = compute_P(n, params) == (r**2 - 1) ** n
    R_ok = metric_profile(params, Chart.R).triple == hyperbolic(n, "R").triple
    rho_ok = metric_profile(params, Chart.RHO).triple == hyperbolic(n, "RHO").triple
    return IdentityReport(
        "hyperbolic",
        P_ok and R_ok and rho_ok,
        {"n": n, "P_is_power": P_ok, "profile_R": R_ok, "profile_RHO": rho_ok},
    )


__all__ = [
    "CollapseDecomposition",
    "IdentityError",
    "IdentityReport",
    "ParamLimit",
    "boundary_compactification",
    "collapse_decomposition",
    "collapse_identity",
    "extract_p_leading",
    "fiber_bound",
    "hyperbolic_identity",
    "infinity_limit_identity",
    "limit_metric_text",
    "normalization_identity",
    "origin_smoothness",
    "p_components",
    "p_leading_formula",
    "param_limit",
    "pedersen_identity",
    "roots_in_open",
    "split_by_param",
    "zero_limit_identity",
]
