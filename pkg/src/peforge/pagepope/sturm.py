"""Exact Sturm-sequence root counting and the r0 = 1 positivity gate."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactcore import QQ, LaurentPoly
from ..exactcore.laurent import poly_gcd
from .params import MetricParams
from .polynomials import ConstructionError, compute_P


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while seq[-1] and seq[-1].degree > 0:
        rem = seq[-2] % seq[-1]
        if not rem:
            break
        seq.append(-rem)
    return seq


def _sign(v):
    return (v > 0) - (v < 0)


def sign_variations(seq, x):
    """Sign changes of the sequence at x; ``x="inf"`` uses leading coefficients."""
    signs = []
    for q in seq:
        if x == "inf":
            s = _sign(q.leading_coeff)
        else:
            s = _sign(q.evaluate(x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, a, b):
    """Distinct real roots of ``p`` in ``(a, b]``; ``a`` must not be a root."""
    if p.evaluate(a) == 0:
        raise ValueError("left endpoint is a root; divide it out first")
    g = poly_gcd(p, p.derivative())
    if g.degree:
        p = p.exact_div(g)  # squarefree part, so a repeated root at b is still counted once
    seq = sturm_sequence(p)
    return sign_variations(seq, a) - sign_variations(seq, b)


def cauchy_bound(p):
    """All real roots satisfy |x| < 1 + max |a_i / a_n|."""
    lc = p.leading_coeff
    return 1 + max((abs(c / lc) for e, c in p.items() if e != p.degree), default=Fraction(0))


def strip_root(p, at):
    """Divide out every factor (var - at); returns (quotient, multiplicity)."""
    lin = LaurentPoly({0: -Fraction(at), 1: 1}, p.var, p.field)
    m = 0
    while p.degree and p.evaluate(at) == 0:
        p = p.exact_div(lin)
        m += 1
    return p, m


def isolate_roots(p, a, b, tol=Fraction(1, 10**6)):
    """Bisection on Sturm counts: intervals (lo, hi] each holding one root."""
    seq = sturm_sequence(p)

    def count(lo, hi):
        return sign_variations(seq, lo) - sign_variations(seq, hi)

    out = []
    stack = [(Fraction(a), Fraction(b))]
    while stack:
        lo, hi = stack.pop()
        k = count(lo, hi)
        if k == 0:
            continue
        if k == 1 and hi - lo < tol:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p.evaluate(mid) == 0:
            out.append((mid, mid))
            stack.append((lo, mid - tol / 4))
            stack.append((mid + tol / 4, hi))
            continue
        stack.extend([(mid, hi), (lo, mid)])
    return sorted(out)


@dataclass
class RootGateReport:
    polynomial: str
    interval: tuple
    sign_changes: int
    r0: Fraction
    roots_found: list = field(default_factory=list)
    multiplicity_at_1: int = 0
    cauchy_bound: Fraction = None

    def to_json(self):
        from ..exactcore import fraction_str

        return {
            "polynomial": self.polynomial,
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "sign_changes": self.sign_changes,
            "r0": fraction_str(self.r0),
            "roots_found": [[fraction_str(a), fraction_str(b)] for a, b in self.roots_found],
            "multiplicity_at_1": self.multiplicity_at_1,
            "cauchy_bound": fraction_str(self.cauchy_bound),
        }


class PositivityError(ConstructionError):
    pass


def positivity_gate(n, c, poly=None):
    """Certify that P_n(., u = 1/c) has no root in (1, inf), so r0 = 1.

    ``poly`` overrides P_n (used for negative controls).
    """
    params = MetricParams(n, Fraction(c))
    P = compute_P(n, params) if poly is None else poly
    if P.field != QQ:
        raise ValueError("positivity gate needs a concrete c")
    reduced, mult = strip_root(P, 1)
    B = cauchy_bound(reduced)
    k = count_roots(reduced, Fraction(1), B)
    k_inf = sign_variations(sturm_sequence(reduced), 1) - sign_variations(
        sturm_sequence(reduced), "inf"
    )
    if k != k_inf:
        raise ConstructionError("Cauchy bound did not enclose all roots")
    roots = isolate_roots(reduced, 1, B) if k else []
    report = RootGateReport(
        polynomial=f"P_{n}(c={params.label()})",
        interval=(1, "inf"),
        sign_changes=k,
        r0=max([Fraction(1)] + [hi for _, hi in roots]),
        roots_found=roots,
        multiplicity_at_1=mult,
        cauchy_bound=B,
    )
    if k:
        raise PositivityError(f"{report.polynomial} has {k} root(s) in (1, inf): {roots}")
    return report
