"""Exponential sums, nonlinear twists, and gamma-factor asymptotics.

``s_sum`` evaluates ``sum a_F(n) exp(2 pi i n z)`` for Im z > 0 with a
reported geometric tail bound; ``twist_sum`` generalizes the exponent to
``sum_i c_i n^{alpha_i}``.  ``gamma_asymptotics`` fits the large-|s|
template

    log gamma_F(s) = (s - 1/2) (d/2 log(s/e) + c_{-1}) + mu/2 log(s/2)
                     + sum_{j<order} c_j s^{-j} + O(|s|^{-order})

to the archimedean factor of a datum; the fitted ``d`` recovers the degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.special as _sp

from .coefficient_algebra import exp_transform
from .errors import DomainError, FitError, PoleError, ResonanceError
from .ldatum_core import LDatum
from .special_functions import LOG_PI, log_gamma

_TAIL_TOLERANCE = 1e-14

#: Sample geometry of the asymptotic fit: two rays, four radii per ray.
FIT_RADII = (50.0, 100.0, 200.0, 400.0)
FIT_ARGS = (0.0, math.pi / 6.0)


@dataclass(frozen=True)
class TwistSpec:
    """Exponent data of a multidimensional nonlinear twist.

    ``alphas`` and ``cs`` must have equal length with strictly positive
    entries and ``alpha_i <= 1``.
    """

    alphas: tuple
    cs: tuple

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        cs = tuple(float(c) for c in self.cs)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "cs", cs)
        if not alphas:
            raise ValueError("twist spec must contain at least one exponent")
        if len(alphas) != len(cs):
            raise ValueError("alphas and cs must have the same length")
        if any(a <= 0 or a > 1 for a in alphas):
            raise ValueError("exponents must satisfy 0 < alpha <= 1")
        if any(c <= 0 for c in cs):
            raise ValueError("twist coefficients must be positive")

    def phase(self, ns: np.ndarray) -> np.ndarray:
        """``sum_i c_i n^{alpha_i}`` for an array of indices."""
        total = np.zeros_like(ns, dtype=float)
        for a, c in zip(self.alphas, self.cs):
            total += c * ns ** a
        return total


class SumResult(NamedTuple):
    value: complex
    tail_bound: float
    terms: int


def _check_upper_half(z: complex) -> complex:
    z = complex(z)
    if z.imag <= 0:
        raise DomainError(f"exponential sum requires Im z > 0, got z = {z}")
    return z


def s_sum(F: LDatum, z, N_cap: int = 100_000) -> SumResult:
    """Exponential sum ``sum_{n<=N} a_F(n) exp(2 pi i n z)`` with tail bound.

    N is the smaller of ``N_cap`` and the first index where the geometric
    tail bound (from the observed coefficient magnitude) drops below 1e-14.
    """
    z = _check_upper_half(z)
    y = z.imag
    r = math.exp(-2.0 * math.pi * y)

    def cutoff(bound: float) -> int:
        need = math.log(max(bound, 1.0) / (_TAIL_TOLERANCE * (1.0 - r)))
        return max(8, int(math.ceil(need / (2.0 * math.pi * y))))

    N = min(N_cap, cutoff(1.0))
    for _ in range(3):
        a = exp_transform(F.f, N)
        amax = max(float(a.declared_bound or 1.0), 1.0)
        N_new = min(N_cap, cutoff(amax))
        if N_new <= N:
            break
        N = N_new
    ns = np.arange(1, N + 1)
    coeffs = a.values(N)
    value = complex(np.sum(coeffs * np.exp(2j * np.pi * z * ns)))
    tail = amax * r ** (N + 1) / (1.0 - r)
    return SumResult(value, float(tail), N)


def twist_sum(F: LDatum, z, spec: TwistSpec, N_cap: int = 100_000) -> SumResult:
    """Nonlinear twist ``sum a_F(n) exp(2 pi i (sum_i c_i n^{alpha_i}) z)``.

    The truncation point is driven by the dominant exponent; the reported
    tail bound comes from an integral comparison against the largest single
    term of the exponent at the cutoff.
    """
    z = _check_upper_half(z)
    if not isinstance(spec, TwistSpec):
        spec = TwistSpec(*spec)
    beta = 2.0 * math.pi * z.imag

    N = 64
    while True:
        a = exp_transform(F.f, N)
        amax = max(float(a.declared_bound or 1.0), 1.0)
        if amax * math.exp(-beta * spec.phase(np.array([float(N)]))[0]) < 1e-16 \
                or N >= N_cap:
            break
        N = min(2 * N, N_cap)
    ns = np.arange(1, N + 1)
    coeffs = a.values(N)
    value = complex(np.sum(coeffs * np.exp(2j * np.pi * z * spec.phase(ns.astype(float)))))

    # Tail: P(n) >= c* n^{alpha*} for the term largest at n = N, and the
    # decreasing-term sum is at most int_N^inf exp(-beta c x^a) dx, an upper
    # incomplete gamma function.
    i_star = int(np.argmax([c * N ** a for a, c in zip(spec.alphas, spec.cs)]))
    a_star, c_star = spec.alphas[i_star], spec.cs[i_star]
    inv_a = 1.0 / a_star
    tail = amax * inv_a * (beta * c_star) ** (-inv_a) * _sp.gamma(inv_a) \
        * float(_sp.gammaincc(inv_a, beta * c_star * N ** a_star))
    return SumResult(value, float(tail), N)


def delta_shift(alpha: float, j: int, d: float) -> float:
    """Contour shift ``2 j alpha / (2 - d alpha)``; resonant when d alpha = 2."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if j < 0:
        raise ValueError("j must be a nonnegative integer")
    denom = 2.0 - d * alpha
    if abs(denom) < 1e-12:
        raise ResonanceError(f"delta_shift resonance: d * alpha = {d * alpha}")
    return 2.0 * j * alpha / denom


# ---------------------------------------------------------------------------
# Gamma-factor asymptotics.


@dataclass(frozen=True)
class GammaAsymptotics:
    """Fitted template parameters; ``d`` agrees with the degree."""

    d: float
    c_minus1: float
    mu: complex
    c_j: tuple
    fit_residual: float


def log_gamma_factor(F: LDatum, s) -> complex:
    """``log gamma_F(s)`` of a GammaSpec kernel.

    Uses the symmetric conductor normalization
    ``gamma(s) = q^{s/2} prod_j Gamma_R(s + mu_j)`` per component, so the
    conductor contributes to the fitted ``c_{-1}``, never to ``d``.
    """
    if not F.symbolic_kernel:
        raise ValueError("log_gamma_factor requires a GammaSpec kernel")
    s = complex(s)
    total = 0.0 + 0.0j
    for spec in F.kernel:
        part = 0.5 * s * spec.log_conductor
        for mu in spec.shifts:
            w = s + mu
            part += -0.5 * w * LOG_PI + log_gamma(0.5 * w)
        total += spec.weight * part
    return total


def gamma_asymptotics(F: LDatum, order: int) -> GammaAsymptotics:
    """Least-squares fit of the log-gamma-factor template.

    Samples ``log gamma_F`` on the rays arg(s) = 0 and pi/6 at
    ``|s| in {50, 100, 200, 400}`` (two rays keep the mu and c_{-1} columns
    independent) and solves the equilibrated normal problem.
    ``fit_residual`` is the largest deviation at the ``|s| = 400`` samples.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    ss = np.array([r * np.exp(1j * a) for a in FIT_ARGS for r in FIT_RADII])
    y = np.array([log_gamma_factor(F, s) for s in ss])

    columns = [((ss - 0.5) * 0.5 * (np.log(ss) - 1.0), False),  # d
               (ss - 0.5, False),                               # c_{-1}
               (0.5 * np.log(ss / 2.0), True)]                  # mu
    for j in range(order):
        columns.append((ss ** (-float(j)), True))               # c_j

    n_rows = 2 * len(ss)
    n_cols = sum(2 if cplx else 1 for _, cplx in columns)
    if n_cols > n_rows:
        raise FitError(f"order {order} needs more samples than available")
    A = np.zeros((n_rows, n_cols))
    i = 0
    for phi, cplx in columns:
        A[: len(ss), i] = phi.real
        A[len(ss):, i] = phi.imag
        if cplx:
            A[: len(ss), i + 1] = -phi.imag
            A[len(ss):, i + 1] = phi.real
            i += 2
        else:
            i += 1
    b = np.concatenate([y.real, y.imag])

    norms = np.linalg.norm(A, axis=0)
    norms[norms == 0] = 1.0
    theta, _, rank, _ = np.linalg.lstsq(A / norms, b, rcond=None)
    if rank < n_cols:
        raise FitError("asymptotic template fit is rank deficient")
    theta = theta / norms
    if not np.all(np.isfinite(theta)):
        raise FitError("asymptotic template fit produced non-finite parameters")

    deviations = np.abs(A @ theta - b)
    at_400 = np.abs(np.abs(ss) - FIT_RADII[-1]) < 1e-9
    mask = np.concatenate([at_400, at_400])
    fit_residual = float(deviations[mask].max())

    c_j = tuple(complex(theta[4 + 2 * j], theta[5 + 2 * j]) for j in range(order))
    return GammaAsymptotics(
        d=float(theta[0]),
        c_minus1=float(theta[1]),
        mu=complex(theta[2], theta[3]),
        c_j=c_j,
        fit_residual=fit_residual,
    )


def g_factor(s, d: float, c_minus1: float, mu) -> complex:
    """Mellin factor for the single linear twist (N = 1, alpha = 1):

    ``G(s) = (2 pi (1 - d/2)^{1 - d/2} e^{c_{-1}})^{1/2 - s}
             Gamma((1 - d/2)(s - 1/2) + (1 - mu)/2)``.

    Defined for ``0 <= d < 2``; evaluated through log-gamma so conjugate
    symmetry ``G(conj s; d, c_{-1}, conj mu) = conj G(s)`` is exact.
    """
    if not 0.0 <= d < 2.0:
        raise DomainError(f"g_factor requires 0 <= d < 2, got d = {d}")
    s = complex(s)
    mu = complex(mu)
    half = 1.0 - 0.5 * d
    log_base = math.log(2.0 * math.pi) + half * math.log(half) + c_minus1
    w = half * (s - 0.5) + 0.5 * (1.0 - mu)
    try:
        lg = log_gamma(w)
    except PoleError as exc:
        raise PoleError(f"g_factor gamma argument {w} is a pole") from exc
    return complex(np.exp((0.5 - s) * log_base + lg))
