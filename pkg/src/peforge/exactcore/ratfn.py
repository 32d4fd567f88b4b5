"""Reduced rational functions ``num/den`` in one variable over a coefficient field.

Canonical form: numerator and denominator are ordinary polynomials (negative
exponents are cleared into the other side), ``gcd(num, den) == 1`` and the
denominator is monic.  Two RatFns are equal iff their canonical pairs are equal.
"""

from fractions import Fraction

from .errors import (
    DegenerateSubstitutionError,
    FieldMismatchError,
    VariableMismatchError,
    ZeroDenominatorError,
)
from .fields import QQ, RESERVED, Field, FunctionField
from .laurent import LaurentPoly, poly_gcd


class RatFn:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, var=None, field=None):
        if isinstance(num, RatFn) or isinstance(den, RatFn):
            q = num if den is None else as_ratfn(num, den.var, den.field) / den
            self.num, self.den = q.num, q.den
            return
        if not isinstance(num, LaurentPoly):
            if var is None:
                raise TypeError("scalar numerator needs an explicit var")
            num = LaurentPoly.constant(num, var, field or QQ)
        if den is None:
            den = LaurentPoly.constant(1, num.var, num.field)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den, num.var, num.field)
        if den.var != num.var:
            if den.is_constant():
                den = den.rename(num.var)
            elif num.is_constant():
                num = num.rename(den.var)
            else:
                raise VariableMismatchError(f"{num.var!r} vs {den.var!r}")
        if den.field != num.field:
            if num.field == QQ:
                num = num.change_field(den.field)
            elif den.field == QQ:
                den = den.change_field(num.field)
            else:
                raise FieldMismatchError(f"{num.field} vs {den.field}")
        if not den:
            raise ZeroDenominatorError("rational function with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def gen(cls, var, field=QQ):
        return cls._raw(LaurentPoly.gen(var, field), LaurentPoly.constant(1, var, field))

    @classmethod
    def constant(cls, c, var, field=QQ):
        return cls._raw(LaurentPoly.constant(c, var, field), LaurentPoly.constant(1, var, field))

    @property
    def var(self):
        return self.num.var

    @property
    def field(self):
        return self.num.field

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def is_polynomial(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # -- coercion ---------------------------------------------------------

    def _binary(self, other):
        """Bring ``self`` and ``other`` into one ring; (None, None) if foreign."""
        if isinstance(other, LaurentPoly):
            other = RatFn(other)
        if isinstance(other, RatFn):
            return _unify(self, other)
        try:
            return self, RatFn.constant(other, self.var, self.field)
        except TypeError:
            return None, None

    def change_field(self, field):
        if field == self.field:
            return self
        return RatFn._raw(self.num.change_field(field), self.den.change_field(field))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        if not a.num:
            return b
        if not b.num:
            return a
        if a.den == b.den:
            return RatFn(a.num + b.num, a.den)
        g = poly_gcd(a.den, b.den)
        if g.degree == 0:
            return RatFn._raw_normalized(a.num * b.den + b.num * a.den, a.den * b.den)
        ad = a.den.exact_div(g)
        bd = b.den.exact_div(g)
        num = a.num * bd + b.num * ad
        den = ad * b.den
        if not num:
            return RatFn._raw(num, LaurentPoly.constant(1, a.var, a.field))
        h = poly_gcd(num, g)
        if h.degree:
            num = num.exact_div(h)
            den = den.exact_div(h)
        return RatFn._raw_normalized(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        if not a.num or not b.num:
            return RatFn.constant(0, a.var, a.field)
        n1, d1, n2, d2 = a.num, a.den, b.num, b.den
        if d1.degree and n2.degree:
            g = poly_gcd(n2, d1)
            if g.degree:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        if d2.degree and n1.degree:
            g = poly_gcd(n1, d2)
            if g.degree:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        return RatFn._raw_normalized(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDenominatorError("inverse of zero rational function")
        return RatFn._raw_normalized(self.den, self.num)

    def __truediv__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("RatFn powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        # gcd(num, den) = 1 already, so powers stay reduced
        return RatFn._raw(self.num**k, self.den**k)

    @classmethod
    def _raw_normalized(cls, num, den):
        """num/den already coprime; only fix the denominator's leading coeff."""
        lc = den.leading_coeff
        if lc != 1:
            inv = den.field.one / lc
            num = num.scale(inv)
            den = den.scale(inv)
        return cls._raw(num, den)

    def __eq__(self, other):
        try:
            a, b = self._binary(other)
        except (VariableMismatchError, FieldMismatchError):
            return False
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def equals_cross(self, other):
        """Exact equality by cross multiplication: a/b == c/d iff ad - bc == 0."""
        a, b = self._binary(other)
        return not (a.num * b.den - b.num * a.den)

    # -- calculus / evaluation -------------------------------------------

    def derivative(self):
        n, d = self.num, self.den
        if d.degree == 0:
            return RatFn._raw(n.derivative(), d)
        return RatFn(n.derivative() * d - n * d.derivative(), d * d)

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        if not dv:
            raise ZeroDenominatorError(f"{self} has a pole at {self.var}={x}")
        return self.num.evaluate(x) / dv

    __call__ = evaluate

    def map_coeffs(self, fn, field):
        """Apply a coefficient homomorphism and re-canonicalize."""
        num = self.num.map_coeffs(fn, field)
        den = self.den.map_coeffs(fn, field)
        if not den:
            raise ZeroDenominatorError("specialization annihilates the denominator")
        return RatFn(num, den)

    def specialize(self, value):
        """Send the coefficient-field generator (u or w) to a concrete rational."""
        if not isinstance(self.field, FunctionField):
            raise FieldMismatchError("specialize needs coefficients in Q(u) or Q(w)")
        v = QQ.convert(value)
        return self.map_coeffs(lambda e: e.evaluate(v), QQ)

    def rename(self, var):
        return RatFn._raw(self.num.rename(var), self.den.rename(var))

    def substitute(self, sub):
        """Compose ``self(sub(y))``, with ``sub`` a nonconstant RatFn in ``y``."""
        if not isinstance(sub, RatFn):
            sub = RatFn(sub)
        if sub.is_constant():
            raise DegenerateSubstitutionError("substitution by a constant is not a chart change")
        f = self
        if f.field != sub.field:
            if f.field == QQ:
                f = f.change_field(sub.field)
            elif sub.field == QQ:
                sub = sub.change_field(f.field)
            else:
                raise FieldMismatchError(f"{f.field} vs {sub.field}")
        if not f.num:
            return RatFn.constant(0, sub.var, sub.field)
        a, b = sub.num, sub.den
        dn = f.num.degree or 0
        dd = f.den.degree or 0
        d = max(dn, dd)
        one = LaurentPoly.constant(1, a.var, a.field)
        apow, bpow = [one], [one]
        for _ in range(d):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)

        def homog(p, deg):
            out = LaurentPoly({}, a.var, a.field)
            for k, c in p.items():
                out = out + (apow[k] * bpow[deg - k]).scale(c)
            return out

        # With gcd(num, den) = 1 and gcd(a, b) = 1 the homogenized pieces are
        # coprime to each other and to b, so no gcd is needed.
        num = homog(f.num, dn)
        den = homog(f.den, dd)
        if dd > dn:
            num = num * bpow[dd - dn]
        elif dn > dd:
            den = den * bpow[dn - dd]
        return RatFn._raw_normalized(num, den)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"RatFn({self.num!r}, {self.den!r})"

    def __str__(self):
        from .serialize import format_ratfn

        return format_ratfn(self)


def _unify(a, b):
    if a.var == b.var:
        if a.field == b.field:
            return a, b
        if a.field == QQ:
            return a.change_field(b.field), b
        if b.field == QQ:
            return a, b.change_field(a.field)
        raise FieldMismatchError(f"coefficient fields differ: {a.field} vs {b.field}")
    if getattr(b.field, "var", None) == a.var and a.field == QQ:
        return RatFn.constant(a, b.var, b.field), b
    if getattr(a.field, "var", None) == b.var and b.field == QQ:
        return a, RatFn.constant(b, a.var, a.field)
    if a.field == QQ and b.field == QQ:
        if a.var in RESERVED and b.var not in RESERVED:
            f = RESERVED[a.var]
            return RatFn.constant(a, b.var, f), b.change_field(f)
        if b.var in RESERVED and a.var not in RESERVED:
            f = RESERVED[b.var]
            return a.change_field(f), RatFn.constant(b, a.var, f)
    if a.is_constant() and a.field == b.field:
        return a.rename(b.var), b
    if b.is_constant() and a.field == b.field:
        return a, b.rename(a.var)
    raise VariableMismatchError(f"variables differ: {a.var!r} vs {b.var!r}")


def _canonical(num, den):
    if not num:
        return num, LaurentPoly.constant(1, num.var, num.field)
    lo = min(num.low_degree, den.low_degree)
    if lo:
        num, den = num.shift(-lo), den.shift(-lo)
    g = poly_gcd(num, den)
    if g.degree:
        num = num.exact_div(g)
        den = den.exact_div(g)
    lc = den.leading_coeff
    if lc != 1:
        inv = num.field.one / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def ratfn_normalize(n, d):
    """Canonical reduced representative of ``n/d``."""
    return RatFn(n, d)


def ratfn_substitute(f, sub):
    return f.substitute(sub)


def as_ratfn(x, var, field=QQ):
    if isinstance(x, RatFn):
        return x
    if isinstance(x, LaurentPoly):
        return RatFn(x)
    return RatFn.constant(x, var, field)


__all__ = ["RatFn", "ratfn_normalize", "ratfn_substitute", "as_ratfn", "Fraction", "Field"]
