"""Classification diagnostics for low-degree data.

Everything here is a diagnostic at finite truncation: the underlying
classification facts quantify over infinite data, so these routines report
consistency with a category, never proof of membership.

Degree ranges and their verdicts:

* d = 0: only the trivial datum exists (multiplicity one).
* 0 < d < 1: no positive data exist.
* d = 1: positive data are Dirichlet L-functions up to an imaginary shift.
* 1 < d < 2: no positive data exist.
* d >= 2: outside the classified range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .coefficient_algebra import CoefficientStream, exp_transform
from .instances import DirichletCharacter, primitive_characters
from .ldatum_core import LDatum, degree
from .reports import Report

CATEGORY_TRIVIAL = "trivial"
CATEGORY_IMPOSSIBLE_LOW = "impossible(0<d<1)"
CATEGORY_DIRICHLET = "dirichlet(d=1)"
CATEGORY_IMPOSSIBLE_MID = "impossible(1<d<2)"
CATEGORY_UNKNOWN = "unknown(d>=2)"

_SLOPE_THRESHOLD = 0.05
_DEGREE_SNAP = 1e-9


@dataclass(frozen=True)
class CharacterMatch:
    """Result of a successful character identification."""

    modulus: int
    index: int
    t: float
    character: DirichletCharacter
    zeta_like: bool = False


@dataclass(frozen=True)
class ClassificationVerdict:
    degree: float
    category: str
    evidence: str
    match: CharacterMatch | None = None


def _probe_slopes(xs, sums):
    slopes = []
    pairs = list(zip(xs, sums))
    for (x0, s0), (x1, s1) in zip(pairs, pairs[1:]):
        if s0 <= 0 or s1 <= 0:
            slopes.append(float("-inf"))
        else:
            slopes.append(math.log(s1 / s0) / math.log(x1 / x0))
    return slopes


def triviality_diagnostic(F: LDatum, N: int) -> Report:
    """Finite-truncation checks of the multiplicity-one equivalences.

    Probes the partial sums ``sum |f(n)|/log n`` and ``sum |a(n)|/sqrt(n)``
    and the zero-count ratio ``(sum_{|Re z|<=T} |m|)/T``; a trivial datum has
    all three flat or decaying (growth slope < 0.05).
    """
    if N < 100:
        raise ValueError("triviality diagnostic needs N >= 100")
    report = Report(title="triviality diagnostic (finite truncation)")
    probes = [max(2, N // 100), max(3, N // 10), N]

    fv = np.abs(F.f.values(N))
    ns = np.arange(1, N + 1, dtype=float)
    f_terms = np.zeros(N)
    f_terms[1:] = fv[1:] / np.log(ns[1:])
    f_cum = np.cumsum(f_terms)
    f_sums = [float(f_cum[p - 1]) for p in probes]
    f_slopes = _probe_slopes(probes, f_sums)
    report.add("sum |f(n)|/log n at probes", f_sums)
    report.add("f-sum slopes", f_slopes)

    a = exp_transform(F.f, N)
    a_cum = np.cumsum(np.abs(a.values(N)) / np.sqrt(ns))
    a_sums = [float(a_cum[p - 1]) for p in probes]
    a_slopes = _probe_slopes(probes, a_sums)
    report.add("sum |a(n)|/sqrt(n) at probes", a_sums)
    report.add("a-sum slopes", a_slopes)

    T = F.zeros.T_max
    if T > 0:
        ts = [T / 4.0, T / 2.0, T]
        ratios = [F.zeros.abs_mass_within(t) / t for t in ts]
        ratio_slopes = _probe_slopes(ts, ratios)
        report.add("zero-count ratio at T_max/4, T_max/2, T_max", ratios)
        report.add("ratio slopes", ratio_slopes)
    else:
        ratio_slopes = [float("-inf")]
        report.add("zero-count ratio", "no coverage")

    flat = all(
        s[-1] < _SLOPE_THRESHOLD for s in (f_slopes, a_slopes, ratio_slopes)
    )
    report.verdict = (
        "consistent with trivial" if flat else "not trivial"
    )
    return report


def detect_periodicity(a: CoefficientStream, N: int, q_max: int):
    """Smallest period q <= q_max with ``|a(n+q) - a(n)| <= 1e-9``, or None."""
    if N < 4 * q_max:
        raise ValueError("detect_periodicity needs N >= 4 * q_max")
    arr = a.values(N)
    for q in range(1, q_max + 1):
        if float(np.max(np.abs(arr[q:] - arr[:-q]))) <= 1e-9:
            return q
    return None


def _divisors(q: int) -> list[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


def _primes_upto(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve)


def match_character(a: CoefficientStream, q: int, N: int,
                    t_bound: float = 10.0) -> CharacterMatch | None:
    """Identify ``a(n) = chi(n) n^{-it}`` for a primitive chi mod a divisor of q.

    The shift t is located on a coarse grid over ``[-t_bound, t_bound]`` and
    refined by branch-corrected least squares on
    ``arg a(p) = arg chi(p) - t log p`` over primes ``p <= N`` coprime to q.
    A candidate is accepted only if ``|a(n) - chi(n) n^{-it}| <= 1e-6`` for
    every ``n <= N``; the first (smallest-modulus) match is returned.
    """
    if q > 10_000:
        raise ValueError("modulus above 10^4 is not supported")
    arr = a.values(N)
    ns = np.arange(1, N + 1)
    primes = _primes_upto(min(N, 229))
    primes = primes[np.gcd(primes, q) == 1]
    logp = np.log(primes.astype(float))
    ap = arr[primes - 1]

    grid = np.arange(-t_bound, t_bound + 0.005, 0.005)
    phases = np.exp(1j * np.outer(grid, logp))

    for d in _divisors(q):
        for chi in primitive_characters(d):
            chip = np.array([chi(int(p)) for p in primes])
            inner = ap * np.conj(chip)
            if np.min(np.abs(inner)) < 0.5:
                continue
            # Coarse grid pick, then unwrap and solve the linear fit exactly.
            score = (phases * inner).real.sum(axis=1)
            t0 = float(grid[int(np.argmax(score))])
            theta = np.angle(inner)
            wraps = np.round((-t0 * logp - theta) / (2.0 * np.pi))
            unwrapped = theta + 2.0 * np.pi * wraps
            t_hat = -float(np.dot(unwrapped, logp) / np.dot(logp, logp))
            if abs(t_hat) < 1e-9:
                t_hat = 0.0
            chin = np.array([chi(int(n)) for n in ns])
            model = chin * ns.astype(float) ** (-1j * t_hat)
            if float(np.max(np.abs(arr - model))) <= 1e-6:
                return CharacterMatch(
                    modulus=d, index=chi.index, t=t_hat, character=chi,
                    zeta_like=(d == 1),
                )
    return None


def degree_gate(d: float) -> ClassificationVerdict:
    """Verdict table over the classified degree ranges."""
    if d < -_DEGREE_SNAP:
        raise ValueError(f"degree must be nonnegative, got {d}")
    if abs(d) <= _DEGREE_SNAP:
        return ClassificationVerdict(
            d, CATEGORY_TRIVIAL,
            "degree 0 admits only the trivial datum (multiplicity one)",
        )
    if abs(d - 1.0) <= _DEGREE_SNAP:
        return ClassificationVerdict(
            d, CATEGORY_DIRICHLET,
            "positive degree-1 data are Dirichlet L-functions up to an "
            "imaginary shift; run the periodicity and character matchers",
        )
    if d < 1.0:
        return ClassificationVerdict(
            d, CATEGORY_IMPOSSIBLE_LOW,
            "no positive data exist with degree strictly between 0 and 1",
        )
    if d < 2.0:
        return ClassificationVerdict(
            d, CATEGORY_IMPOSSIBLE_MID,
            "no positive data exist with degree strictly between 1 and 2",
        )
    return ClassificationVerdict(
        d, CATEGORY_UNKNOWN,
        "degree >= 2 lies outside the classified range",
    )


class GateResult(NamedTuple):
    holds: bool
    explanation: str


def vanishing_order_gate(n: int, k: int) -> GateResult:
    """Does a degree-n completed L-function of a unitary cuspidal datum have
    infinitely many zeros of order not divisible by k?

    Argument skeleton: if all but finitely many zeros had order divisible by
    k, scaling the datum by 1/k would produce a positive datum of degree
    n/k.  For n/k < 2 every such degree is excluded: the open intervals
    (0,1) and (1,2) contain no positive data, degree 0 would force the
    trivial datum, and degree exactly 1 would make the completed L-function
    the k-th power of a shifted Dirichlet L-function, contradicting
    cuspidality.  So the gate holds precisely when n/k < 2.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    ratio = n / k
    if ratio < 2.0:
        return GateResult(
            True,
            f"n/k = {n}/{k} = {ratio:.6g} < 2: a (1/{k})-scaled datum would have "
            f"forbidden degree {ratio:.6g}, so infinitely many zeros have order "
            f"not divisible by {k}",
        )
    return GateResult(
        False,
        f"n/k = {n}/{k} = {ratio:.6g} >= 2 falls outside the classified degree "
        "range; the gate is inconclusive",
    )


def classify(F: LDatum, N: int = 2000, q_max: int = 50) -> ClassificationVerdict:
    """Degree gate plus, in degree 1, periodicity and character matching.

    Evidence strings are labeled as diagnostics at finite truncation.
    """
    d = degree(F)
    verdict = degree_gate(d)
    if verdict.category == CATEGORY_DIRICHLET:
        a = exp_transform(F.f, N)
        period = detect_periodicity(a, N, min(q_max, N // 4))
        if period is not None:
            match = match_character(a, period, N)
            if match is not None:
                evidence = (
                    verdict.evidence
                    + f"; coefficients have period {period} and match the "
                    f"primitive character mod {match.modulus} (index "
                    f"{match.index}) with t = {match.t:.9g} "
                    "(diagnostic at finite truncation)"
                )
                return ClassificationVerdict(d, verdict.category, evidence, match)
        evidence = (verdict.evidence
                    + "; no periodic character match (diagnostic at finite truncation)")
        return ClassificationVerdict(d, verdict.category, evidence)
    if verdict.category == CATEGORY_TRIVIAL:
        trivia = triviality_diagnostic(F, max(N, 100))
        evidence = (verdict.evidence
                    + f"; triviality diagnostic: {trivia.verdict} (finite truncation)")
        return ClassificationVerdict(d, verdict.category, evidence)
    return verdict
