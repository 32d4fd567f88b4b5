"""Sparse Laurent polynomials in one variable over a pluggable coefficient field."""

from fractions import Fraction

from .errors import (
    FieldMismatchError,
    UnsupportedIntegralError,
    VariableMismatchError,
    ZeroDenominatorError,
)
from .fields import QQ, RESERVED, Field


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` map; exponents may be negative.

    Zero coefficients are never stored, so ``degree``/``low_degree`` are the
    max/min stored exponents.
    """

    __slots__ = ("var", "field", "_terms")

    def __init__(self, terms=None, var="x", field=QQ):
        if not isinstance(field, Field):
            raise TypeError("field must be a Field instance")
        self.var = var
        self.field = field
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if int(e) != e:
                    raise ValueError(f"non-integer exponent {e!r}")
                c = field.convert(c)
                if c:
                    e = int(e)
                    if e in clean:
                        c = clean[e] + c
                        if not c:
                            del clean[e]
                            continue
                    clean[e] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms, var, field):
        # terms already converted and free of zeros
        p = object.__new__(cls)
        p.var = var
        p.field = field
        p._terms = terms
        return p

    @classmethod
    def gen(cls, var, field=QQ):
        return cls._raw({1: field.one}, var, field)

    @classmethod
    def constant(cls, c, var, field=QQ):
        return cls({0: c}, var, field)

    @classmethod
    def monomial(cls, c, exp, var, field=QQ):
        return cls({exp: c}, var, field)

    @classmethod
    def from_coeffs(cls, coeffs, var, field=QQ, start=0):
        """Dense ascending coefficient list, first entry at exponent ``start``."""
        return cls({start + i: c for i, c in enumerate(coeffs)}, var, field)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp):
        return self._terms.get(exp, self.field.zero)

    @property
    def degree(self):
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self):
        return min(self._terms) if self._terms else None

    @property
    def leading_coeff(self):
        if not self._terms:
            return self.field.zero
        return self._terms[self.degree]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    def is_polynomial(self):
        return not self._terms or self.low_degree >= 0

    def __len__(self):
        return len(self._terms)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        """``other`` as a LaurentPoly in self's ring (self may need promotion)."""
        a, b = self._binary(other)
        return b

    def change_field(self, field):
        """Embed coefficients into ``field`` (only Q -> Q(u)/Q(w) is meaningful)."""
        if field == self.field:
            return self
        if self.field != QQ:
            raise FieldMismatchError(f"cannot move coefficients from {self.field} to {field}")
        return LaurentPoly._raw({e: field.convert(c) for e, c in self._terms.items()}, self.var, field)

    def _binary(self, other):
        if isinstance(other, LaurentPoly):
            return _unify(self, other)
        from .ratfn import RatFn

        if isinstance(other, RatFn):
            if getattr(self.field, "var", None) == other.var and other.field == QQ:
                return self, LaurentPoly.constant(other, self.var, self.field)
            return None, None
        try:
            return self, LaurentPoly.constant(other, self.var, self.field)
        except TypeError:
            return None, None

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.var, self.field)

    def __pos__(self):
        return self

    def __add__(self, other):
        a, b = self._binary(other)
        if a is None:
            return NotImplemented
        out = dict(a._terms)
        for e, c in b._terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return LaurentPoly._raw(out, a.var, a.field)

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
        out = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, a.var, a.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int) and len(self._terms) == 1:
                (e, c), = self._terms.items()
                return LaurentPoly._raw({e * k: c**k}, self.var, self.field)
            raise ValueError("LaurentPoly powers must be non-negative integers (or monomial)")
        result = LaurentPoly.constant(1, self.var, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        from .ratfn import RatFn

        if isinstance(other, (LaurentPoly, RatFn)) and not (
            isinstance(other, RatFn) and getattr(self.field, "var", None) == other.var
        ):
            return RatFn(self) / other
        a, o = self._binary(other)
        if a is None:
            return NotImplemented
        c = o.coeff(0)
        if not c:
            raise ZeroDenominatorError("division by zero")
        return a.scale(a.field.one / c)

    def __rtruediv__(self, other):
        from .ratfn import RatFn

        return other / RatFn(self)

    def __eq__(self, other):
        try:
            a, o = self._binary(other)
        except (VariableMismatchError, FieldMismatchError):
            return False
        if a is None:
            return NotImplemented
        return a._terms == o._terms

    def __hash__(self):
        return hash((self.var, self.field.name, frozenset(self._terms.items())))

    def shift(self, k):
        """Multiply by ``var**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self.var, self.field)

    def scale(self, c):
        c = self.field.convert(c)
        if not c:
            return LaurentPoly._raw({}, self.var, self.field)
        return LaurentPoly._raw({e: v * c for e, v in self._terms.items()}, self.var, self.field)

    def map_coeffs(self, fn, field):
        return LaurentPoly({e: fn(c) for e, c in self._terms.items()}, self.var, field)

    def rename(self, var):
        return LaurentPoly._raw(dict(self._terms), var, self.field)

    # -- calculus ---------------------------------------------------------

    def derivative(self):
        return LaurentPoly._raw(
            {e - 1: c * e for e, c in self._terms.items() if e != 0}, self.var, self.field
        )

    def antiderivative_from_1(self, var=None):
        """``F(r) = integral_1^r p(t) dt`` as a Laurent polynomial in ``var``."""
        if -1 in self._terms:
            raise UnsupportedIntegralError(
                f"{self.var}^-1 term present; antiderivative needs a logarithm"
            )
        out = {e + 1: c / (e + 1) for e, c in self._terms.items()}
        const = -sum(out.values(), self.field.zero)
        if const:
            out[0] = out.get(0, self.field.zero) + const
        return LaurentPoly({e: c for e, c in out.items()}, var or self.var, self.field)

    def evaluate(self, x):
        """Evaluate at ``x`` (a field element, Fraction, int, or mpmath number)."""
        if not self._terms:
            return self.field.zero
        total = None
        for e, c in self._terms.items():
            if e >= 0:
                term = c * x**e
            else:
                term = c / x ** (-e)
            total = term if total is None else total + term
        return total

    __call__ = evaluate

    # -- division ---------------------------------------------------------

    def divmod(self, other):
        """Euclidean division of ordinary polynomials (no negative exponents)."""
        a, b = self._binary(other)
        if a is None:
            raise TypeError(f"cannot divide by {other!r}")
        if not b:
            raise ZeroDenominatorError("polynomial division by zero")
        if not (a.is_polynomial() and b.is_polynomial()):
            raise ValueError("divmod needs polynomials without negative exponents")
        rem = dict(a._terms)
        db = b.degree
        lb = b.leading_coeff
        inv = a.field.one / lb
        quot = {}
        bterms = list(b._terms.items())
        while rem:
            dr = max(rem)
            if dr < db:
                break
            q = rem[dr] * inv
            k = dr - db
            quot[k] = q
            for e, c in bterms:
                ee = e + k
                v = rem.get(ee)
                nv = (v - q * c) if v is not None else -q * c
                if nv:
                    rem[ee] = nv
                elif v is not None:
                    del rem[ee]
            rem.pop(dr, None)
        return (
            LaurentPoly._raw(quot, a.var, a.field),
            LaurentPoly._raw(rem, a.var, a.field),
        )

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def monic(self):
        if not self._terms:
            return self
        return self / self.leading_coeff

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.items()!r}, var={self.var!r}, field={self.field.name})"

    def __str__(self):
        from .serialize import format_poly

        return format_poly(self)


def _unify(a, b):
    from .ratfn import RatFn

    if a.var == b.var:
        if a.field == b.field:
            return a, b
        if a.field == QQ:
            return a.change_field(b.field), b
        if b.field == QQ:
            return a, b.change_field(a.field)
        raise FieldMismatchError(f"coefficient fields differ: {a.field} vs {b.field}")
    if getattr(b.field, "var", None) == a.var and a.field == QQ:
        return LaurentPoly.constant(RatFn(a), b.var, b.field), b
    if getattr(a.field, "var", None) == b.var and b.field == QQ:
        return a, LaurentPoly.constant(RatFn(b), a.var, a.field)
    if a.field == QQ and b.field == QQ:
        if a.var in RESERVED and b.var not in RESERVED:
            f = RESERVED[a.var]
            return LaurentPoly.constant(RatFn(a), b.var, f), b.change_field(f)
        if b.var in RESERVED and a.var not in RESERVED:
            f = RESERVED[b.var]
            return a.change_field(f), LaurentPoly.constant(RatFn(b), a.var, f)
    raise VariableMismatchError(f"variables differ: {a.var!r} vs {b.var!r}")


def poly_gcd(a, b):
    """Monic gcd of two polynomials over a field (Euclid with monic remainders)."""
    if a.field != b.field:
        if a.field == QQ:
            a = a.change_field(b.field)
        elif b.field == QQ:
            b = b.change_field(a.field)
        else:
            raise FieldMismatchError(f"{a.field} vs {b.field}")
    if not b:
        return a.monic() if a else a
    if not a:
        return b.monic()
    if a.degree < b.degree:
        a, b = b, a
    b = b.monic()
    while b:
        if b.degree == 0:
            return LaurentPoly.constant(1, a.var, a.field)
        _, r = a.divmod(b)
        a, b = b, (r.monic() if r else r)
    return a.monic()


def poly_arith(a, b, op):
    """Functional form of the four ring operations used by the CLI and tests."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError("pow exponent must be a non-negative integer")
        return a**b
    raise ValueError(f"unknown op {op!r}")


def rational(x):
    return x if isinstance(x, Fraction) else Fraction(x)
