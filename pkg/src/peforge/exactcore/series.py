"""Truncated power series with exact coefficients."""

from dataclasses import dataclass

from .errors import PoleError
from .laurent import LaurentPoly
from .ratfn import RatFn


@dataclass(frozen=True)
class SeriesExpansion:
    """``sum_{k=0}^{order} coefficients[k] * var**k + O(var**(order+1))``.

    ``center`` is ``0`` or ``"inf"``; at infinity ``var`` is the inverted
    coordinate (e.g. ``x = 1/r``).
    """

    var: str
    center: object
    coefficients: tuple
    order: int
    field: object

    def coeff(self, k):
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coefficients[k]

    def odd_coefficients(self):
        return [self.coefficients[k] for k in range(1, self.order + 1, 2)]

    def is_even(self):
        return not any(self.odd_coefficients())

    def as_poly(self):
        return LaurentPoly(dict(enumerate(self.coefficients)), self.var, self.field)

    def evaluate(self, x):
        total = self.field.zero
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def _check(self, other):
        if not isinstance(other, SeriesExpansion):
            return None
        if other.var != self.var or other.center != self.center:
            raise ValueError("series in different variables or centers")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        if n is None:
            return NotImplemented
        cs = tuple(self.coefficients[k] + other.coefficients[k] for k in range(n + 1))
        return SeriesExpansion(self.var, self.center, cs, n, self.field)

    def __neg__(self):
        return SeriesExpansion(
            self.var, self.center, tuple(-c for c in self.coefficients), self.order, self.field
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SeriesExpansion):
            c = self.field.convert(other)
            return SeriesExpansion(
                self.var, self.center, tuple(c * a for a in self.coefficients), self.order, self.field
            )
        n = self._check(other)
        cs = []
        for k in range(n + 1):
            acc = self.field.zero
            for i in range(k + 1):
                acc = acc + self.coefficients[i] * other.coefficients[k - i]
            cs.append(acc)
        return SeriesExpansion(self.var, self.center, tuple(cs), n, self.field)

    __rmul__ = __mul__

    def to_json(self):
        from .serialize import coeff_to_json

        return {
            "type": "SeriesExpansion",
            "var": self.var,
            "center": str(self.center),
            "order": self.order,
            "field": self.field.name,
            "coefficients": [coeff_to_json(c) for c in self.coefficients],
        }


def _power_series_quotient(num, den, n):
    """First ``n+1`` coefficients of num/den where den(0) != 0."""
    field = num.field
    d0 = den.coeff(0)
    inv0 = field.one / d0
    dcs = [den.coeff(k) for k in range(n + 1)]
    out = []
    for k in range(n + 1):
        acc = num.coeff(k)
        for i in range(1, k + 1):
            if dcs[i]:
                acc = acc - dcs[i] * out[k - i]
        out.append(acc * inv0)
    return out


def series_expand(f, center=0, order=6, var=None):
    """Exact Taylor coefficients of ``f`` at ``center`` (0 or ``"inf"``) up to ``order``.

    At infinity the expansion variable is ``1/f.var`` (named ``var``, default
    ``"x"``).  A pole raises :class:`PoleError` carrying the pole order.
    """
    if not isinstance(f, RatFn):
        f = RatFn(f)
    if center in ("inf", "oo", float("inf")):
        name = var or "x"
        x = RatFn.gen(name, f.field)
        g = f.substitute(1 / x) if not f.is_constant() else f.rename(name)
        s = series_expand(g, 0, order)
        return SeriesExpansion(s.var, "inf", s.coefficients, s.order, s.field)
    if center != 0:
        raise ValueError("center must be 0 or 'inf'")
    if order < 0:
        raise ValueError("order must be non-negative")
    field = f.field
    if not f:
        return SeriesExpansion(f.var, 0, tuple([field.zero] * (order + 1)), order, field)
    vn = f.num.low_degree
    vd = f.den.low_degree
    val = vn - vd
    if val < 0:
        raise PoleError(-val)
    num = f.num.shift(-vn)
    den = f.den.shift(-vd)
    inner = _power_series_quotient(num, den, order - val) if order >= val else []
    cs = [field.zero] * val + inner
    return SeriesExpansion(f.var, 0, tuple(cs[: order + 1]), order, field)
