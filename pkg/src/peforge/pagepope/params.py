"""Metric parameters: half-dimension n and how the squashing parameter c is carried."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..exactcore import QQ, QU, QW


class ConfigError(ValueError):
    """Invalid parameter or chart/c-mode combination."""


FORMAL_U = "formal_u"
FORMAL_W = "formal_w"


def _rational_sqrt(q):
    q = Fraction(q)
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


@dataclass(frozen=True)
class MetricParams:
    """``n >= 2`` and ``c_mode`` in {"formal_u", "formal_w"} or a positive rational.

    Formal modes keep c symbolic: u = 1/c generates Q(u), w = sqrt(c)
    generates Q(w).  Einstein constants are fixed: lambda = 2n for the base
    and Lambda = -(2n-1) for the total space.
    """

    n: int
    c_mode: object = FORMAL_U

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ConfigError(f"n must be an integer >= 2, got {self.n!r}")
        if self.c_mode not in (FORMAL_U, FORMAL_W):
            try:
                c = Fraction(self.c_mode)
            except (TypeError, ValueError):
                raise ConfigError(f"bad c_mode {self.c_mode!r}") from None
            if c <= 0:
                raise ConfigError(f"c must be positive, got {c}")
            object.__setattr__(self, "c_mode", c)

    @property
    def is_formal(self):
        return self.c_mode in (FORMAL_U, FORMAL_W)

    @property
    def lam(self):
        return 2 * self.n

    @property
    def Lam(self):
        return -(2 * self.n - 1)

    @property
    def field(self):
        return {FORMAL_U: QU, FORMAL_W: QW}.get(self.c_mode, QQ)

    @property
    def c(self):
        if self.c_mode == FORMAL_U:
            return 1 / QU.gen()
        if self.c_mode == FORMAL_W:
            return QW.gen() ** 2
        return self.c_mode

    @property
    def u(self):
        if self.c_mode == FORMAL_U:
            return QU.gen()
        if self.c_mode == FORMAL_W:
            return QW.gen() ** -2
        return 1 / self.c_mode

    @property
    def w(self):
        """sqrt(c) as a field element; concrete c must be a rational square."""
        if self.c_mode == FORMAL_W:
            return QW.gen()
        if self.c_mode == FORMAL_U:
            raise ConfigError("sqrt(c) is not available over Q(u); use formal_w")
        root = _rational_sqrt(self.c_mode)
        if root is None:
            raise ConfigError(f"sqrt({self.c_mode}) is irrational; use formal_w")
        return root

    def with_c(self, c):
        return MetricParams(self.n, c)

    def label(self):
        if self.c_mode == FORMAL_U:
            return "u"
        if self.c_mode == FORMAL_W:
            return "w"
        return str(self.c_mode)
