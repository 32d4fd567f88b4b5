"""The structure polynomials Q_k, Q~_k and P_n.

    Q_k = r * int_1^r t^-2 (t^2 - 1)^k dt
    P_n = (2n - 1) Q_n + 2n u Q_{n-1},   u = 1/c
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..exactcore import QQ, LaurentPoly, RatFn
from .params import FORMAL_U, MetricParams


class ConstructionError(ArithmeticError):
    """An identity that must hold by construction failed."""


_r = LaurentPoly.gen("r")
_t = LaurentPoly.gen("t")


@lru_cache(maxsize=None)
def compute_Q(k):
    if k < 1:
        raise ValueError("Q_k is defined here for k >= 1")
    integrand = _t**-2 * (_t**2 - 1) ** k
    Q = _r * integrand.antiderivative_from_1("r")
    if not Q.is_polynomial():
        raise ConstructionError(f"Q_{k} kept negative powers of r")
    return Q


@lru_cache(maxsize=None)
def compute_Qtilde(k):
    """Exact quotient ``Q_k / (r - 1)^(k+1)``."""
    q, rem = compute_Q(k).divmod((_r - 1) ** (k + 1))
    if rem:
        raise ConstructionError(f"(r-1)^{k + 1} does not divide Q_{k}")
    return q


def compute_P(n, params=None):
    """``P_n`` as a polynomial in r over the field of ``params`` (default Q(u))."""
    if n < 2:
        raise ValueError("P_n needs n >= 2")
    params = params or MetricParams(n, FORMAL_U)
    F = params.field
    return compute_Q(n).change_field(F) * (2 * n - 1) + compute_Q(n - 1).change_field(F).scale(
        2 * n * F.convert(params.u)
    )


def verify_P_ode(n, params=None):
    """Residual of ``(P/r)' = lambda u r^-2 (r^2-1)^(n-1) - Lambda r^-2 (r^2-1)^n``.

    Returned as a RatFn in r; it is identically zero for a correct P_n.
    """
    params = params or MetricParams(n, FORMAL_U)
    F = params.field
    r = LaurentPoly.gen("r", F)
    P = compute_P(n, params)
    lhs = (r**-1 * P).derivative()
    rhs = (r**-2 * (r**2 - 1) ** (n - 1)).scale(params.lam * F.convert(params.u)) - (
        r**-2 * (r**2 - 1) ** n
    ).scale(params.Lam)
    return RatFn(lhs - rhs)


def in_s(p):
    """Re-express a polynomial in r as a polynomial in s = r - 1."""
    s = LaurentPoly.gen("s", p.field)
    out = LaurentPoly({}, "s", p.field)
    for e, c in p.items():
        out = out + ((s + 1) ** e).scale(c)
    return out


# -- text rendering for the CLI -------------------------------------------


def content_and_primitive(p):
    """Split a Q-polynomial as ``content * primitive`` with integer primitive part."""
    if not p:
        return Fraction(0), p
    den = 1
    for _, c in p.items():
        den = den * c.denominator // gcd(den, c.denominator)
    nums = [int(c * den) for _, c in p.items()]
    g = 0
    for v in nums:
        g = gcd(g, v)
    if p.leading_coeff < 0:
        g = -g
    content = Fraction(g, den)
    return content, p / content


def _compact(p):
    return str(p).replace(" ", "")


def _factor_term(coeff, k, formal=""):
    """``coeff * formal * (r-1)^(k+1) * Q~_k`` rendered compactly."""
    content, prim = content_and_primitive(compute_Qtilde(k))
    c = coeff * content
    head = ""
    if c != 1 or not formal:
        if c.denominator != 1:
            head = f"({c.numerator}/{c.denominator})"
        elif c != 1:
            head = str(c.numerator)
    head += formal
    body = f"(r-1)^{k + 1}"
    if prim != 1:
        body += f"({_compact(prim)})"
    return head + body


def factored_Q(k):
    return _factor_term(Fraction(1), k)


def factored_P(n):
    return f"{_factor_term(Fraction(2 * n - 1), n)} + {_factor_term(Fraction(2 * n), n - 1, 'u')}"


__all__ = [
    "ConstructionError",
    "compute_P",
    "compute_Q",
    "compute_Qtilde",
    "content_and_primitive",
    "factored_P",
    "factored_Q",
    "in_s",
    "verify_P_ode",
    "QQ",
]
