"""Text rendering and canonical JSON for exact objects.

JSON form: exponents sorted ascending, big integers as decimal strings, so
the output is byte-stable across runs and platforms.
"""

from fractions import Fraction

from .fields import QQ, field_by_name


def fraction_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _var_power(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e > 0 else f"{var}^({e})"


def _coeff_text(c):
    """Render a coefficient; returns (text, is_compound)."""
    from .ratfn import RatFn

    if isinstance(c, RatFn):
        if c.is_polynomial():
            body = format_poly(c.num / c.den.leading_coeff) if c.den.leading_coeff != 1 else format_poly(c.num)
            return body, len(c.num) > 1
        return format_ratfn(c), True
    return fraction_str(c), False


def _is_negative(c):
    from .ratfn import RatFn

    if isinstance(c, RatFn):
        return c.num.leading_coeff < 0 and len(c.num) == 1
    return c < 0


def format_poly(p, descending=True):
    """Compact human form, e.g. ``r^4 - 6r^2 + 8r - 3`` or ``(2u + 1)r^2``."""
    if not p:
        return "0"
    items = p.items()
    if descending:
        items = items[::-1]
    out = []
    for i, (e, c) in enumerate(items):
        neg = _is_negative(c)
        if neg:
            c = -c
        text, compound = _coeff_text(c)
        mono = _var_power(p.var, e)
        if mono:
            if text == "1":
                term = mono
            elif compound:
                term = f"({text}){mono}"
            elif "/" in text:
                term = f"({text}){mono}"
            elif len(p.var) == 1 and not any(ch.isalpha() for ch in text):
                term = f"{text}{mono}"
            else:
                term = f"{text}*{mono}"
        else:
            term = f"({text})" if compound and len(items) > 1 else text
        if i == 0:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)


def clear_nested(f):
    """Scale num and den so that Q(u)/Q(w) coefficients become polynomials."""
    from .fields import FunctionField
    from .laurent import poly_gcd

    if not isinstance(f.field, FunctionField):
        return f.num, f.den
    lcm = None
    for p in (f.num, f.den):
        for _, c in p.items():
            d = c.den
            lcm = d if lcm is None else (lcm * d).exact_div(poly_gcd(lcm, d))
    if lcm is None or lcm.degree == 0:
        return f.num, f.den
    from .ratfn import RatFn

    scale = RatFn(lcm)
    return f.num.scale(scale), f.den.scale(scale)




def format_ratfn(f):
    if f.is_polynomial():
        return format_poly(f.num)
    n, d = clear_nested(f)
    num = format_poly(n)
    den = format_poly(d)
    if len(n) > 1:
        num = f"({num})"
    if len(d) > 1 or d.coeff(d.degree) != 1:
        den = f"({den})"
    return f"{num}/{den}"


# -- JSON -----------------------------------------------------------------


def coeff_to_json(c):
    from .ratfn import RatFn

    if isinstance(c, RatFn):
        return ratfn_to_json(c)
    return fraction_str(c)


def poly_to_json(p):
    return {
        "type": "LaurentPoly",
        "var": p.var,
        "field": p.field.name,
        "terms": [[e, coeff_to_json(c)] for e, c in p.items()],
    }


def ratfn_to_json(f):
    return {
        "type": "RatFn",
        "var": f.var,
        "field": f.field.name,
        "num": poly_to_json(f.num),
        "den": poly_to_json(f.den),
    }


def _coeff_from_json(obj, field):
    if isinstance(obj, dict):
        return field.convert(from_json(obj))
    return field.convert(Fraction(obj))


def from_json(obj):
    """Inverse of :func:`poly_to_json` / :func:`ratfn_to_json`."""
    from .laurent import LaurentPoly
    from .ratfn import RatFn

    kind = obj.get("type")
    field = field_by_name(obj["field"])
    if kind == "LaurentPoly":
        return LaurentPoly(
            {int(e): _coeff_from_json(c, field) for e, c in obj["terms"]}, obj["var"], field
        )
    if kind == "RatFn":
        return RatFn(from_json(obj["num"]), from_json(obj["den"]))
    raise ValueError(f"unknown JSON object type {kind!r}")


def to_json(x):
    """Canonical JSON-ready value for any exact object (or plain data)."""
    from .laurent import LaurentPoly
    from .ratfn import RatFn
    from .series import SeriesExpansion

    if isinstance(x, LaurentPoly):
        return poly_to_json(x)
    if isinstance(x, RatFn):
        return ratfn_to_json(x)
    if isinstance(x, SeriesExpansion):
        return x.to_json()
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > 2**53 else x
    if isinstance(x, dict):
        return {str(k): to_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json(v) for v in x]
    return str(x)


__all__ = [
    "QQ",
    "format_poly",
    "format_ratfn",
    "fraction_str",
    "from_json",
    "poly_to_json",
    "ratfn_to_json",
    "to_json",
]
