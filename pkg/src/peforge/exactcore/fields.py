"""Coefficient fields: Q, and the one-variable function fields Q(u), Q(w).

Q(u) and Q(w) are realised as canonical rational functions over Q in a
reserved variable.  The tower stops there: coefficients of a Q(u) element are
always plain Fractions.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC


class Field:
    name = "?"

    def convert(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(("Field", self.name))

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, _RationalABC, str)):
            return Fraction(x)
        from .ratfn import RatFn

        if isinstance(x, RatFn) and x.is_constant():
            return QQ.convert(x.constant_value())
        raise TypeError(f"cannot convert {x!r} to an element of Q")


class FunctionField(Field):
    """Q(var): rational functions over Q in a single reserved variable."""

    def __init__(self, var):
        self.var = var
        self.name = f"Q({var})"

    def convert(self, x):
        from .ratfn import RatFn

        if isinstance(x, RatFn):
            if x.field == QQ and (x.var == self.var or x.is_constant()):
                if x.var != self.var:
                    return RatFn.constant(x.constant_value(), self.var, QQ)
                return x
            raise TypeError(f"{x!r} is not an element of {self.name}")
        return RatFn.constant(QQ.convert(x), self.var, QQ)

    def gen(self):
        """The transcendental generator (u or w) as a field element."""
        from .ratfn import RatFn

        return RatFn.gen(self.var, QQ)

    def specialize(self, element, value):
        """Field homomorphism Q(var) -> Q sending var to ``value``."""
        return self.convert(element).evaluate(QQ.convert(value))


QQ = RationalField()
QU = FunctionField("u")
QW = FunctionField("w")

# variable names that denote a coefficient-field generator
RESERVED = {"u": QU, "w": QW}

_BY_NAME = {f.name: f for f in (QQ, QU, QW)}


def field_by_name(name):
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown coefficient field {name!r}") from None
