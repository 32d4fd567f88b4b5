"""Finite-difference Ricci oracle for n = 2, independent of the closed forms.

The 4-metric on (1, inf) x S^3 is assembled numerically from the embedding
S^3 -> C^2 in Hopf coordinates (eta, xi1, xi2):

    z1 = cos(eta) e^{i xi1},   z2 = sin(eta) e^{i xi2},
    theta = sum Im(conj(z) dz),   g_CP1 = g_S3 - theta^2,
    g = alpha^2 dr^2 + beta^2 theta^2 + gamma^2 g_CP1.

Christoffel symbols and Ricci come from centred differences of the metric
coefficients; the orthonormal frame is built from the metric itself (e0 along
d/dr, e1 the g-dual of theta, e2/e3 by Gram-Schmidt).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import mpmath

from ..pagepope import MetricParams, metric_profile
from .ricci import mpq, ricci_diagonal

DIM = 4
ETA_MARGIN = 0.05


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    R00: object
    R11: object
    Raa: object
    offdiag_max: object
    frame_ricci: tuple
    h: float

    def components(self):
        return (self.R00, self.R11, self.Raa)

    def to_json(self, digits=15):
        return {
            "R00": mpmath.nstr(self.R00, digits),
            "R11": mpmath.nstr(self.R11, digits),
            "Raa": mpmath.nstr(self.Raa, digits),
            "offdiag_max": mpmath.nstr(self.offdiag_max, 5),
            "h": self.h,
        }


def _horner(p, x):
    acc = mpmath.mpf(0)
    deg = p.degree or 0
    for k in range(deg, -1, -1):
        acc = acc * x + mpq(p.coeff(k))
    return acc


def _ratfn_mp(f):
    return lambda x: _horner(f.num, x) / _horner(f.den, x)


def _embedding(eta, xi1, xi2):
    """z and dz/d(eta, xi1, xi2) for the Hopf-coordinate embedding of S^3."""
    e1 = mpmath.expj(xi1)
    e2 = mpmath.expj(xi2)
    z = (mpmath.cos(eta) * e1, mpmath.sin(eta) * e2)
    dz = (
        (-mpmath.sin(eta) * e1, 1j * mpmath.cos(eta) * e1, mpmath.mpc(0)),
        (mpmath.cos(eta) * e2, mpmath.mpc(0), 1j * mpmath.sin(eta) * e2),
    )
    return z, dz


def _sphere_forms(eta, xi1, xi2):
    """Round metric of S^3 and the contact form theta, pulled back to coordinates."""
    z, dz = _embedding(eta, xi1, xi2)
    gS = [[mpmath.re(sum(dz[k][i] * mpmath.conj(dz[k][j]) for k in range(2))) for j in range(3)] for i in range(3)]
    theta = [mpmath.im(sum(mpmath.conj(z[k]) * dz[k][i] for k in range(2))) for i in range(3)]
    return gS, theta


class _Metric:
    def __init__(self, profile):
        self.A, self.B, self.G = (_ratfn_mp(f) for f in profile.triple)

    def __call__(self, q):
        r, eta, xi1, xi2 = q
        A, B, G = self.A(r), self.B(r), self.G(r)
        gS, th = _sphere_forms(eta, xi1, xi2)
        g = [[mpmath.mpf(0)] * DIM for _ in range(DIM)]
        g[0][0] = A
        for i in range(3):
            for j in range(3):
                g[i + 1][j + 1] = B * th[i] * th[j] + G * (gS[i][j] - th[i] * th[j])
        return g

    def theta(self, q):
        _, th = _sphere_forms(q[1], q[2], q[3])
        return [mpmath.mpf(0)] + th


def _shift(q, k, d):
    q = list(q)
    q[k] += d
    return q


def _finite_differences(metric, q, h):
    g0 = metric(q)
    plus = [metric(_shift(q, k, h)) for k in range(DIM)]
    minus = [metric(_shift(q, k, -h)) for k in range(DIM)]
    dg = [[[(plus[k][i][j] - minus[k][i][j]) / (2 * h) for j in range(DIM)] for i in range(DIM)] for k in range(DIM)]
    ddg = [[None] * DIM for _ in range(DIM)]
    for k in range(DIM):
        ddg[k][k] = [[(plus[k][i][j] - 2 * g0[i][j] + minus[k][i][j]) / h**2 for j in range(DIM)] for i in range(DIM)]
    for k in range(DIM):
        for l in range(k + 1, DIM):
            pp = metric(_shift(_shift(q, k, h), l, h))
            pm = metric(_shift(_shift(q, k, h), l, -h))
            mp_ = metric(_shift(_shift(q, k, -h), l, h))
            mm = metric(_shift(_shift(q, k, -h), l, -h))
            m = [[(pp[i][j] - pm[i][j] - mp_[i][j] + mm[i][j]) / (4 * h**2) for j in range(DIM)] for i in range(DIM)]
            ddg[k][l] = ddg[l][k] = m
    return g0, dg, ddg


def _inverse(g):
    return [list(row) for row in mpmath.inverse(mpmath.matrix(g)).tolist()]


def ricci_from_derivatives(g, dg, ddg):
    """Coordinate Ricci tensor from g, dg[k][i][j] = d_k g_ij, ddg[k][l][i][j]."""
    n = len(g)
    gi = _inverse(g)
    R = range(n)
    # lowered Christoffel: Gl[d][b][c] = (d_b g_dc + d_c g_db - d_d g_bc) / 2
    Gl = [[[(dg[b][d][c] + dg[c][d][b] - dg[d][b][c]) / 2 for c in R] for b in R] for d in R]
    Gam = [[[sum(gi[a][d] * Gl[d][b][c] for d in R) for c in R] for b in R] for a in R]
    dgi = [[[-sum(gi[a][f] * dg[e][f][m] * gi[m][d] for f in R for m in R) for d in R] for a in R] for e in R]
    # dGam[e][a][b][c] = d_e Gam^a_bc
    dGl = [
        [[[(ddg[e][b][d][c] + ddg[e][c][d][b] - ddg[e][d][b][c]) / 2 for c in R] for b in R] for d in R]
        for e in R
    ]
    dGam = [
        [[[sum(dgi[e][a][d] * Gl[d][b][c] + gi[a][d] * dGl[e][d][b][c] for d in R) for c in R] for b in R] for a in R]
        for e in R
    ]
    Ric = [[mpmath.mpf(0)] * n for _ in R]
    for b, c in product(R, R):
        s = mpmath.mpf(0)
        for a in R:
            s += dGam[a][a][b][c] - dGam[c][a][b][a]
            for d in R:
                s += Gam[a][a][d] * Gam[d][b][c] - Gam[a][c][d] * Gam[d][b][a]
        Ric[b][c] = s
    return Ric


def _dot(g, v, w):
    return sum(g[i][j] * v[i] * w[j] for i in range(len(v)) for j in range(len(w)))


def _orthonormal_frame(g, theta):
    n = len(g)
    gi = _inverse(g)
    e0 = [mpmath.mpf(1), 0, 0, 0]
    e1 = [sum(gi[i][j] * theta[j] for j in range(n)) for i in range(n)]
    frame = []
    for v in (e0, e1):
        for f in frame:
            p = _dot(g, v, f)
            v = [vi - p * fi for vi, fi in zip(v, f)]
        nv = mpmath.sqrt(_dot(g, v, v))
        frame.append([vi / nv for vi in v])
    candidates = []
    for k in (1, 2, 3):
        v = [mpmath.mpf(0)] * n
        v[k] = mpmath.mpf(1)
        for f in frame:
            p = _dot(g, v, f)
            v = [vi - p * fi for vi, fi in zip(v, f)]
        candidates.append(v)
    candidates.sort(key=lambda v: -_dot(g, v, v))
    for v in candidates:
        if len(frame) == n:
            break
        for f in frame:
            p = _dot(g, v, f)
            v = [vi - p * fi for vi, fi in zip(v, f)]
        nv2 = _dot(g, v, v)
        if nv2 > mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
            frame.append([vi / mpmath.sqrt(nv2) for vi in v])
    return frame


def _check_point(point, h, precision):
    r, eta = point[0], point[1]
    if not (1e-8 <= h <= 1e-2):
        raise OracleError(f"step h={h} outside [1e-8, 1e-2]")
    # rounding error of a second difference ~ 10^-precision / h^2
    if 10.0 ** (-precision) / h**2 > 1e-12:
        raise OracleError(f"precision {precision} too low for step {h}")
    if float(r) - 1 <= 10 * h:
        raise OracleError("point too close to r = 1")
    if not (ETA_MARGIN < float(eta) < math.pi / 2 - ETA_MARGIN):
        raise OracleError("eta too close to a Hopf-coordinate singularity")


def numeric_oracle_n2(c, point, h=1e-4, precision=40, profile=None):
    """Ricci diagonal (orthonormal frame) of the n=2 metric by finite differences.

    ``point = (r, eta, xi1, xi2)``.  ``profile`` substitutes another chart-R
    profile for g_c (negative controls).
    """
    _check_point(point, h, precision)
    if profile is None:
        profile = metric_profile(MetricParams(2, Fraction(c)))
    with mpmath.workdps(precision):
        metric = _Metric(profile)
        q = [mpq(point[0]) if isinstance(point[0], Fraction) else mpmath.mpf(point[0])] + [
            mpmath.mpf(x) for x in point[1:]
        ]
        hh = mpmath.mpf(h)
        g, dg, ddg = _finite_differences(metric, q, hh)
        Ric = ricci_from_derivatives(g, dg, ddg)
        frame = _orthonormal_frame(g, metric.theta(q))
        FR = [[_dot(Ric, ea, eb) for eb in frame] for ea in frame]
        off = max(abs(FR[i][j]) for i in range(DIM) for j in range(DIM) if i != j)
        return OracleResult(
            R00=FR[0][0],
            R11=FR[1][1],
            Raa=(FR[2][2] + FR[3][3]) / 2,
            offdiag_max=off,
            frame_ricci=tuple(tuple(row) for row in FR),
            h=h,
        )


def oracle_convergence(c, point, h=1e-4, precision=40):
    """Observed order of the oracle's error against the closed form under h -> h/2."""
    exact = ricci_diagonal(metric_profile(MetricParams(2, Fraction(c))), Fraction(point[0]), precision)
    coarse = numeric_oracle_n2(c, point, h, precision)
    fine = numeric_oracle_n2(c, point, h / 2, precision)
    e1 = max(abs(a - b) for a, b in zip(coarse.components(), exact.components()))
    e2 = max(abs(a - b) for a, b in zip(fine.components(), exact.components()))
    order = mpmath.log(e1 / e2, 2) if e2 else mpmath.inf
    return {"error_h": e1, "error_h2": e2, "order": order, "coarse": coarse, "fine": fine, "exact": exact}
