"""Command-line front end.

Usage:
    peforge qpoly 2
    peforge ppoly 3 --format json
    peforge profile --n 2 --c 1/2 --chart RHO
    peforge verify --n 3 --c formal
    peforge verify --n 2 --c 1 --oracle
    peforge limit-inf --n 3 --grid 0.1:0.9:50 --c-list 10,100,1000,10000
    peforge limit-zero --n 2 --R 5 --c-list 1e-2,1e-4 --format csv
    peforge report --n 3 --order 8

Exit codes: 0 every check passed, 1 a verification failed, 2 usage or
configuration error.  Settings come from built-in defaults, then
PEFORGE_PRECISION, then a TOML file given with --config, then flags.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from importlib import resources

import mpmath
import tomli

from . import __version__
from .asymptotics import (
    GridError,
    boundary_compactification,
    collapse_identity,
    extract_p_leading,
    fiber_bound,
    hyperbolic_identity,
    infinity_limit_identity,
    limit_infinity,
    limit_zero,
    normalization_identity,
    origin_smoothness,
    pedersen_identity,
    uniform_grid,
    zero_limit_identity,
)
from .einstein import (
    PERTURBATIONS,
    OracleError,
    implied_P,
    numeric_oracle_n2,
    oracle_convergence,
    perturb,
    residual_alpha_beta,
    residual_anchor,
    residual_P_ode,
    residual_profile_P_ode,
    residual_tangential,
    residual_transverse,
    ricci_diagonal,
)
from .exactcore import format_poly, format_ratfn, to_json
from .pagepope import (
    Chart,
    ConfigError,
    MetricParams,
    compute_P,
    compute_Q,
    compute_Qtilde,
    factored_P,
    factored_Q,
    metric_profile,
    positivity_gate,
)
from .pagepope.polynomials import ConstructionError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv")
PRECISION_ENV = "PEFORGE_PRECISION"
MIN_PRECISION = 20

# sampled c values when c is formal; seeded radii for Ricci spot checks
SAMPLE_C = (Fraction(1, 10), Fraction(1), Fraction(10))
SPOT_SEED = 20240101
SPOT_COUNT = 10
ORACLE_POINTS = (
    (Fraction(2), 0.6, 0.3, 1.1),
    (Fraction(3, 2), 0.7, 0.2, 0.5),
    (Fraction(5, 2), 0.4, 1.7, 2.9),
    (Fraction(4), 1.1, 0.9, 0.1),
    (Fraction(7, 4), 0.9, 2.4, 1.3),
)
ORACLE_TOL = 1e-5
ORACLE_MIN_ORDER = 1.8


@dataclass
class RunConfig:
    n: int = None
    k: int = None
    c: str = "formal"
    chart: str = "R"
    order: int = 8
    grid: str = None
    c_list: str = None
    precision: int = 40
    format: str = "text"
    out: str = None
    oracle: bool = False
    perturb: str = None
    R1: str = "0.5"
    R2: str = "2"
    R: str = "5"

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        clean = {}
        for key, value in data.items():
            key = key.replace("-", "_")
            if key not in names:
                raise ConfigError(f"unknown config key {key!r}")
            clean[key] = value
        cfg = cls(**clean)
        cfg.normalize()
        return cfg

    def normalize(self):
        """Coerce types and check ranges; raises ConfigError."""
        if self.n is not None:
            self.n = _as_int("n", self.n)
            if self.n < 2:
                raise ConfigError(f"n must be an integer >= 2, got {self.n}")
        if self.k is not None:
            self.k = _as_int("k", self.k)
            if self.k < 1:
                raise ConfigError(f"k must be an integer >= 1, got {self.k}")
        self.c = str(self.c).strip()
        if self.c != "formal":
            c = _as_fraction("c", self.c)
            if c <= 0:
                raise ConfigError(f"c must be positive, got {self.c}")
            self.c = str(c)
        self.chart = Chart.parse(self.chart).value
        self.order = _as_int("order", self.order)
        if self.order < 4 or self.order % 2:
            raise ConfigError(f"order must be even and >= 4, got {self.order}")
        self.precision = _as_int("precision", self.precision)
        if self.precision < MIN_PRECISION:
            raise ConfigError(f"precision must be >= {MIN_PRECISION} digits, got {self.precision}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
        if self.perturb is not None and self.perturb not in PERTURBATIONS:
            raise ConfigError(f"perturb must be one of {', '.join(PERTURBATIONS)}")
        self.oracle = bool(self.oracle)
        for key in ("R1", "R2", "R"):
            setattr(self, key, str(_as_fraction(key, getattr(self, key))))
        if self.grid is not None:
            parse_grid(self.grid)
        if self.c_list is not None:
            if not isinstance(self.c_list, str):
                self.c_list = ",".join(str(v) for v in self.c_list)
            parse_c_list(self.c_list)
        return self

    @property
    def c_value(self):
        return None if self.c == "formal" else Fraction(self.c)

    def params(self, mode="formal_u"):
        return MetricParams(self.n, mode if self.c == "formal" else Fraction(self.c))


def _as_int(name, value):
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {value!r}") from None


def _as_fraction(name, value):
    try:
        return Fraction(str(value).strip())
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(f"{name} must be a rational number, got {value!r}") from None


def parse_grid(spec):
    """``lo:hi`` or ``lo:hi:count`` -> tuple of Fractions."""
    parts = str(spec).split(":")
    if len(parts) not in (2, 3):
        raise ConfigError(f"grid must look like lo:hi[:count], got {spec!r}")
    lo, hi = (_as_fraction("grid", p) for p in parts[:2])
    count = _as_int("grid count", parts[2]) if len(parts) == 3 else 50
    try:
        return uniform_grid(lo, hi, count)
    except GridError as exc:
        raise ConfigError(str(exc)) from None


def parse_c_list(spec):
    values = [_as_fraction("c-list", v) for v in str(spec).split(",") if v.strip()]
    if not values or any(v <= 0 for v in values):
        raise ConfigError(f"c-list needs positive values, got {spec!r}")
    return values


def load_toml(path):
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"bad TOML in {path}: {exc}") from None
    return data.get("peforge", data)


def build_config(ns, environ=None):
    environ = os.environ if environ is None else environ
    merged = {}
    if environ.get(PRECISION_ENV):
        merged["precision"] = environ[PRECISION_ENV]
    if getattr(ns, "config", None):
        merged.update({k.replace("-", "_"): v for k, v in load_toml(ns.config).items()})
    for f in fields(RunConfig):
        if hasattr(ns, f.name):
            merged[f.name] = getattr(ns, f.name)
    pos = getattr(ns, "index", None)
    if pos is not None:
        merged["k" if ns.command == "qpoly" else "n"] = pos
    return RunConfig.from_dict(merged)


# -- helpers --------------------------------------------------------------


def _check(name, passed, **details):
    return {"name": name, "passed": bool(passed), **details}


def _residual_check(rep):
    return _check(rep.name, rep.is_zero, residual=str(rep.residual))


def _identity_check(rep):
    d = rep.to_json()
    return _check(d.pop("name"), d.pop("passed"), **{k: to_json(v) for k, v in d.items()})


def _require_n(cfg, command):
    if cfg.n is None:
        raise ConfigError(f"{command} needs --n")


def _spot_radii(n, count=SPOT_COUNT):
    rng = random.Random(SPOT_SEED + n)
    return [1 + Fraction(rng.randint(1, 49_000), 1000) for _ in range(count)]


def _tolerance(precision):
    return mpmath.mpf(10) ** -(precision - 15)


def _poly_rows(p):
    return [(e, to_json(c) if not isinstance(c, Fraction) else str(c)) for e, c in p.items()]


# -- commands -------------------------------------------------------------


def cmd_qpoly(cfg):
    k = cfg.k
    if k is None:
        raise ConfigError("qpoly needs an index k >= 1")
    Q, Qt = compute_Q(k), compute_Qtilde(k)
    result = {
        "k": k,
        "Q": to_json(Q),
        "Qtilde": to_json(Qt),
        "Q_text": format_poly(Q),
        "Qtilde_text": format_poly(Qt),
        "factored": factored_Q(k),
        "Qtilde_at_1": str(Qt.evaluate(Fraction(1))),
    }
    text = [
        f"Q_{k} = {factored_Q(k)}",
        f"expanded: {format_poly(Q)}",
        f"Qtilde_{k} = {format_poly(Qt)}",
        f"Qtilde_{k}(1) = {result['Qtilde_at_1']}",
    ]
    return result, [], text, _poly_rows(Q)


def cmd_ppoly(cfg):
    n = cfg.n
    if n is None:
        raise ConfigError("ppoly needs an index n >= 2")
    params = cfg.params()
    P = compute_P(n, params)
    expanded = format_poly(P)
    result = {"n": n, "c": params.label(), "P": to_json(P), "P_text": expanded}
    if params.is_formal:
        result["factored"] = factored_P(n)
        text = [f"P_{n} = {factored_P(n)}", f"expanded: {expanded}"]
    else:
        text = [f"P_{n}(c={params.label()}) = {expanded}"]
    return result, [], text, _poly_rows(P)


def _profile_for(cfg):
    chart = Chart.parse(cfg.chart)
    mode = "formal_w" if chart is Chart.T else "formal_u"
    return metric_profile(cfg.params(mode), chart)


def cmd_profile(cfg):
    _require_n(cfg, "profile")
    prof = _profile_for(cfg)
    result = prof.to_json()
    text = [f"profile n={cfg.n} c={prof.params.label()} chart={prof.chart.value} (metric = alpha2 d{prof.var}^2 + beta2 theta^2 + gamma2 g_CP)"]
    text += [f"{name} = {format_ratfn(f)}" for name, f in zip(("alpha2", "beta2", "gamma2"), prof.triple)]
    return result, [], text, None


def _gate_check(prof, c):
    P = implied_P(prof)
    n = prof.params.n
    if not P.is_polynomial():
        return _check(f"positivity_gate(c={c})", False, reason="implied P is not a polynomial")
    poly = P.num
    if P.den.leading_coeff != 1:
        poly = poly.scale(1 / P.den.leading_coeff)
    try:
        rep = positivity_gate(n, c, poly=poly)
    except ConstructionError as exc:
        return _check(f"positivity_gate(c={c})", False, reason=str(exc))
    return _check(f"positivity_gate(c={c})", rep.sign_changes == 0, r0=str(rep.r0), roots=rep.sign_changes)


def _ricci_checks(prof, c, precision):
    n = prof.params.n
    target = -(2 * n - 1)
    tol = _tolerance(precision)
    worst, split = mpmath.mpf(0), mpmath.mpf(0)
    try:
        for r0 in _spot_radii(n):
            rd = ricci_diagonal(prof, r0, precision)
            worst = max(worst, rd.max_deviation(target))
            split = max(split, abs(rd.R00 - rd.R11))
    except (ArithmeticError, ValueError) as exc:
        return _check(f"ricci(c={c})", False, reason=str(exc))
    return _check(
        f"ricci(c={c})",
        worst < tol and split < tol,
        max_deviation=mpmath.nstr(worst, 5),
        R00_minus_R11=mpmath.nstr(split, 5),
        tolerance=mpmath.nstr(tol, 3),
        radii=len(_spot_radii(n)),
    )


def _oracle_checks(prof, c, precision):
    out = []
    worst = mpmath.mpf(0)
    agree = mpmath.mpf(0)
    offdiag = mpmath.mpf(0)
    for point in ORACLE_POINTS:
        res = numeric_oracle_n2(c, point, precision=precision, profile=prof)
        worst = max([worst] + [abs(v + 3) for v in res.components()])
        offdiag = max(offdiag, res.offdiag_max)
        closed = ricci_diagonal(prof, point[0], precision)
        agree = max([agree] + [abs(a - b) for a, b in zip(res.components(), closed.components())])
    out.append(
        _check(
            f"oracle(c={c})",
            worst < ORACLE_TOL and offdiag < ORACLE_TOL and agree < ORACLE_TOL,
            max_diag_deviation=mpmath.nstr(worst, 5),
            max_offdiag=mpmath.nstr(offdiag, 5),
            closed_form_delta=mpmath.nstr(agree, 5),
            points=len(ORACLE_POINTS),
        )
    )
    cv = oracle_convergence(c, ORACLE_POINTS[2], precision=precision)
    out.append(_check(f"oracle_order(c={c})", cv["order"] >= ORACLE_MIN_ORDER, order=mpmath.nstr(cv["order"], 4)))
    return out


def verify_checks(cfg):
    """Every check behind ``verify``; negative controls go through ``cfg.perturb``."""
    _require_n(cfg, "verify")
    if cfg.oracle and cfg.n != 2:
        raise ConfigError("--oracle is only available for n = 2")
    base = metric_profile(cfg.params())
    prof = perturb(base, cfg.perturb) if cfg.perturb else base
    checks = [_residual_check(f(prof)) for f in (residual_transverse, residual_tangential, residual_alpha_beta)]
    if cfg.perturb:
        checks.append(_residual_check(residual_profile_P_ode(prof)))
    else:
        checks.append(_residual_check(residual_P_ode(cfg.n, prof.params)))
    checks.append(_residual_check(residual_anchor(prof)))
    samples = SAMPLE_C if cfg.c == "formal" else (cfg.c_value,)
    concrete = {c: prof.specialize(c) if prof.params.is_formal else prof for c in samples}
    for c, p in concrete.items():
        checks.append(_gate_check(p, c))
    for c, p in concrete.items():
        checks.append(_ricci_checks(p, c, cfg.precision))
    if cfg.oracle:
        oracle_cs = (Fraction(1), Fraction(2)) if cfg.c == "formal" else (cfg.c_value,)
        for c in oracle_cs:
            p = concrete.get(c) or prof.specialize(c)
            checks.extend(_oracle_checks(p, c, cfg.precision))
    return checks


def cmd_verify(cfg):
    checks = verify_checks(cfg)
    result = {"n": cfg.n, "c": cfg.c, "perturb": cfg.perturb}
    return result, checks, [], None


def _table_output(table, extra):
    checks = [_identity_check(ch) for ch in table.checks] + [_identity_check(ch) for ch in extra]
    checks.append(_check("monotone", table.monotone, per_decade_ratios=[mpmath.nstr(v, 6) for v in table.per_decade_ratios()]))
    return table.to_json(), checks


def cmd_limit_inf(cfg):
    _require_n(cfg, "limit-inf")
    grid = parse_grid(cfg.grid) if cfg.grid else None
    cs = parse_c_list(cfg.c_list) if cfg.c_list else None
    try:
        table = limit_infinity(cfg.n, grid=grid, c_list=cs, precision=cfg.precision)
    except GridError as exc:
        raise ConfigError(str(exc)) from None
    extra = [hyperbolic_identity(cfg.n)] + ([pedersen_identity()] if cfg.n == 2 else [])
    result, checks = _table_output(table, extra)
    line = table.checks[0].details["line"]
    text = table.to_csv().splitlines() + [f"{line}: {_status(table.checks[0].passed)}"]
    return result, checks, text, table.to_csv()


def cmd_limit_zero(cfg):
    _require_n(cfg, "limit-zero")
    cs = parse_c_list(cfg.c_list) if cfg.c_list else None
    try:
        table = limit_zero(cfg.n, R1=cfg.R1, R2=cfg.R2, R=cfg.R, c_list=cs, precision=cfg.precision)
    except GridError as exc:
        raise ConfigError(str(exc)) from None
    result, checks = _table_output(table, [])
    zero = table.checks[1]
    text = table.to_csv().splitlines() + [f"limit metric: {table.meta['limit_metric']}: {_status(zero.passed)}"]
    return result, checks, text, table.to_csv()


def cmd_report(cfg):
    """All exact identities for one n plus the formal verification suite."""
    _require_n(cfg, "report")
    n = cfg.n
    reps = [
        origin_smoothness(n, cfg.order),
        boundary_compactification(n),
        extract_p_leading(n),
        normalization_identity(n),
        infinity_limit_identity(n),
        collapse_identity(n),
        zero_limit_identity(n),
        fiber_bound(n),
        hyperbolic_identity(n),
    ]
    if n == 2:
        reps.append(pedersen_identity())
    checks = [_identity_check(r) for r in reps]
    vcfg = RunConfig.from_dict({**cfg.to_dict(), "c": "formal", "oracle": False})
    checks += verify_checks(vcfg)
    return {"n": n, "order": cfg.order}, checks, [], None


COMMANDS = {
    "qpoly": cmd_qpoly,
    "ppoly": cmd_ppoly,
    "profile": cmd_profile,
    "verify": cmd_verify,
    "limit-inf": cmd_limit_inf,
    "limit-zero": cmd_limit_zero,
    "report": cmd_report,
}
CSV_COMMANDS = ("qpoly", "ppoly", "limit-inf", "limit-zero")


# -- rendering ------------------------------------------------------------


def _status(ok):
    return "PASS" if ok else "FAIL"


def _detail_text(check):
    skip = {"name", "passed"}
    parts = []
    for k, v in check.items():
        if k in skip or isinstance(v, (dict, list)):
            continue
        parts.append(f"{k}={v}")
    return "  ".join(parts)


def render(command, cfg, result, checks, text, csv_payload):
    passed = all(ch["passed"] for ch in checks)
    if cfg.format == "json":
        doc = {
            "command": command,
            "version": __version__,
            "config": cfg.to_dict(),
            "passed": passed,
            "checks": checks,
            "result": result,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", passed
    if cfg.format == "csv":
        if command not in CSV_COMMANDS:
            raise ConfigError(f"--format csv is not available for {command}")
        if isinstance(csv_payload, str):
            return csv_payload, passed
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["exponent", "coefficient"])
        for e, c in csv_payload:
            writer.writerow([e, c if isinstance(c, str) else json.dumps(c, sort_keys=True)])
        return buf.getvalue(), passed
    lines = list(text)
    for ch in checks:
        detail = _detail_text(ch)
        lines.append(f"{ch['name']}: {_status(ch['passed'])}" + (f"  {detail}" if detail else ""))
    if checks:
        lines.append(f"overall: {_status(passed)}")
    return "\n".join(lines) + "\n", passed


def load_schema():
    """The JSON schema every ``--format json`` report validates against."""
    text = resources.files("peforge.schema").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--n", type=int, help="dimension parameter (real dimension 2n)")
    common.add_argument("--c", help='squashing parameter: a positive rational or "formal"')
    common.add_argument("--chart", help="R, S, RHO, T or X")
    common.add_argument("--order", type=int, help="series order (even, >= 4)")
    common.add_argument("--grid", help="rho-grid lo:hi[:count] for limit-inf")
    common.add_argument("--c-list", dest="c_list", help="comma separated c values")
    common.add_argument("--precision", type=int, help="mpmath working digits")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--config", help="TOML file with defaults (flags win)")
    common.add_argument("--oracle", action="store_true", help="verify: add the n=2 finite-difference oracle")
    common.add_argument("--perturb", choices=PERTURBATIONS, help="verify: corrupt the profile (negative control)")
    common.add_argument("--R1", help="limit-zero: lower end of the base interval")
    common.add_argument("--R2", help="limit-zero: upper end of the base interval")
    common.add_argument("--R", help="limit-zero: fibre sup is taken over t in (0, R]")

    parser = argparse.ArgumentParser(prog="peforge", description="SU(n)-invariant Poincare-Einstein metrics on the ball")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in ("qpoly", "ppoly"):
            sp.add_argument("index", nargs="?", type=int, default=None, help="k for qpoly, n for ppoly")
    return parser


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = build_config(ns)
        result, checks, text, csv_payload = COMMANDS[ns.command](cfg)
        output, passed = render(ns.command, cfg, result, checks, text, csv_payload)
    except (ConfigError, OracleError) as exc:
        print(f"peforge {ns.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
