"""Deliberately corrupted profiles used as negative controls."""

from fractions import Fraction

from ..exactcore import RatFn
from ..pagepope import Chart, ConfigError

PERTURBATIONS = ("gamma", "beta", "P-constant")


def perturb(profile, kind, amount=Fraction(1, 5)):
    """Return ``profile`` with one ingredient corrupted.

    gamma:       gamma^2 -> gamma^2 + r
    beta:        beta^2 -> 2 beta^2
    P-constant:  P -> P + amount * r in both alpha^2 and beta^2 (a wrong integration constant)
    """
    if profile.chart is not Chart.R:
        raise ConfigError("negative controls are applied in chart R")
    p = profile.params
    F = p.field
    r = RatFn.gen("r", F)
    if kind == "gamma":
        return profile.with_triple(gamma2=profile.gamma2 + r)
    if kind == "beta":
        return profile.with_triple(beta2=2 * profile.beta2)
    if kind == "P-constant":
        base = r**2 - 1
        c = F.convert(p.c)
        P = profile.beta2 * base ** (p.n - 1) / c**2 + F.convert(amount) * r
        return profile.with_triple(alpha2=base ** (p.n - 1) / P, beta2=c**2 * base ** (1 - p.n) * P)
    raise ConfigError(f"unknown perturbation {kind!r}; expected one of {', '.join(PERTURBATIONS)}")


__all__ = ["PERTURBATIONS", "perturb"]
