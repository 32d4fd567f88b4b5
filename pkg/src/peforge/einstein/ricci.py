"""Closed-form Ricci diagonal of the Page-Pope ansatz, evaluated in big-float arithmetic.

In the orthonormal coframe (alpha dr, beta theta, gamma theta^a):

    R00 = (-b''/(a^2 b) + a'b'/(a^3 b)) + (2n-2)(-g''/(a^2 g) + a'g'/(a^3 g))
    R11 = (-b''/(a^2 b) + a'b'/(a^3 b)) + (2n-2)(-b'g'/(a^2 b g) + b^2/g^4)
    Raa = -g''/(a^2 g) + a'g'/(a^3 g) - b'g'/(a^2 b g) - 2 b^2/g^4
          - (2n-3)(g'/(a g))^2 + lambda/g^2
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..pagepope import Chart
from .residuals import ChartError

DEFAULT_PRECISION = 40


def mpq(q):
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


@dataclass(frozen=True)
class RicciDiagonal:
    R00: object
    R11: object
    Raa: object
    precision: int = DEFAULT_PRECISION

    def components(self):
        return (self.R00, self.R11, self.Raa)

    def max_deviation(self, target):
        return max(abs(v - target) for v in self.components())

    def to_json(self, digits=None):
        digits = digits or min(self.precision, 30)
        return {k: mpmath.nstr(getattr(self, k), digits) for k in ("R00", "R11", "Raa")}


def _sqrt_chain(F, F1, F2):
    """(f, f', f'') for f = sqrt(F) from F, F', F''."""
    f = mpmath.sqrt(F)
    f1 = F1 / (2 * f)
    f2 = F2 / (2 * f) - F1**2 / (4 * f**3)
    return f, f1, f2


def ricci_diagonal(profile, r, precision=DEFAULT_PRECISION):
    """Evaluate R00, R11, Raa at the rational point ``r > 1``.

    Derivatives are exact RatFn derivatives of the profile; floating point
    enters only when the resulting rationals are combined under square roots.
    """
    if profile.chart is not Chart.R:
        raise ChartError("ricci_diagonal works in chart R")
    if profile.params.is_formal:
        raise ValueError("ricci_diagonal needs a concrete c; specialize the profile first")
    r = Fraction(r)
    if r <= 1:
        raise ValueError(f"r must exceed 1, got {r}")
    n = profile.params.n
    lam = profile.params.lam
    vals = []
    for f in profile.triple:
        f1 = f.derivative()
        vals.append([f.evaluate(r), f1.evaluate(r), f1.derivative().evaluate(r)])
    with mpmath.workdps(precision + 10):
        (A, A1, _), (B, B1, B2), (G, G1, G2) = [[mpq(v) for v in row] for row in vals]
        a, a1, _ = _sqrt_chain(A, A1, mpmath.mpf(0))
        b, b1, b2 = _sqrt_chain(B, B1, B2)
        g, g1, g2 = _sqrt_chain(G, G1, G2)
        shared = -b2 / (a**2 * b) + a1 * b1 / (a**3 * b)
        R00 = shared + (2 * n - 2) * (-g2 / (a**2 * g) + a1 * g1 / (a**3 * g))
        R11 = shared + (2 * n - 2) * (-b1 * g1 / (a**2 * b * g) + b**2 / g**4)
        Raa = (
            -g2 / (a**2 * g)
            + a1 * g1 / (a**3 * g)
            - b1 * g1 / (a**2 * b * g)
            - 2 * b**2 / g**4
            - (2 * n - 3) * (g1 / (a * g)) ** 2
            + lam / g**2
        )
    with mpmath.workdps(precision):
        return RicciDiagonal(+R00, +R11, +Raa, precision)
