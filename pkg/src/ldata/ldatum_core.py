"""The L-datum abstraction: coefficients, archimedean kernel, multiplicities.

An :class:`LDatum` bundles an f-stream, a kernel given as a real-weighted
list of :class:`GammaSpec` components (or an opaque callable), and a finite
truncation of the multiplicity function as :class:`ZeroData`.  The datum
carries the real-linear structure of explicit formulae: data add and scale
componentwise (:func:`combine`), the degree ``2 lim_{x->0+} x K(x)`` adds,
and the conductor ``exp(-2 f(1))`` multiplies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .coefficient_algebra import CoefficientStream, growth_diagnostics, linear_combination
from .errors import CoverageError
from .reports import Report

#: Entries closer than this merge into one point of supp(m).
MERGE_TOLERANCE = 1e-9

#: Default horizontal strip containing supp(m).
DEFAULT_STRIP_BOUND = 0.5

_MIRROR_AXIS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GammaSpec:
    """Archimedean component ``q^{s/2} prod_j Gamma_R(s + mu_j)``, weighted.

    ``log_conductor`` is ``log q``; every shift must satisfy ``Re mu > -1/2``
    so the induced kernel decays.  An empty shift list is a trivial component
    contributing only conductor data.
    """

    log_conductor: float
    shifts: tuple
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(complex(mu) for mu in self.shifts))
        for mu in self.shifts:
            if mu.real <= -0.5:
                raise ValueError(f"shift {mu} has Re <= -1/2; kernel would not decay")


@dataclass(frozen=True)
class MultiplicityEntry:
    """A point of supp(m): location ``z`` and multiplicity ``m``."""

    z: complex
    m: float


@dataclass(frozen=True)
class ZeroData:
    """Finite truncation of the multiplicity function.

    ``T_max`` is the coverage claim: every point of supp(m) with
    ``|Re z| <= T_max`` is present.  With ``mirrored`` set, entries with
    ``Re z > 0`` imply unstored partners at ``-conj(z)`` with equal
    multiplicity, and no entry with ``Re z < 0`` may be stored.
    """

    entries: tuple = ()
    T_max: float = 0.0
    mirrored: bool = False

    def __post_init__(self):
        entries = tuple(
            e if isinstance(e, MultiplicityEntry) else MultiplicityEntry(complex(e[0]), float(e[1]))
            for e in self.entries
        )
        object.__setattr__(self, "entries", entries)
        if self.T_max < 0:
            raise CoverageError("T_max must be nonnegative")
        if self.mirrored:
            for e in entries:
                if e.z.real < -_MIRROR_AXIS_TOLERANCE:
                    raise CoverageError(
                        f"mirrored zero data stores entry at Re z = {e.z.real} < 0"
                    )
        keyed = sorted(entries, key=lambda e: (e.z.real, e.z.imag))
        for prev, cur in zip(keyed, keyed[1:]):
            if abs(cur.z - prev.z) <= MERGE_TOLERANCE:
                raise CoverageError(f"duplicate multiplicity entries at z = {cur.z}")

    def expanded(self) -> list:
        """Entries with mirror partners materialized."""
        out = list(self.entries)
        if self.mirrored:
            for e in self.entries:
                if e.z.real > _MIRROR_AXIS_TOLERANCE:
                    out.append(MultiplicityEntry(-e.z.conjugate(), e.m))
        return out

    def abs_mass_within(self, T: float) -> float:
        """``sum |m(z)|`` over expanded entries with ``|Re z| <= T``."""
        return sum(abs(e.m) for e in self.expanded() if abs(e.z.real) <= T)


@dataclass(frozen=True)
class LDatum:
    """A triple (f, K, m) with real-linear structure.

    ``kernel`` is either a tuple of :class:`GammaSpec` (the symbolic path,
    enabling exact degree and asymptotics) or an opaque callable ``K(x)``
    restricted to numeric-only treatment.  Immutable; derived data live in
    the module functions.
    """

    f: CoefficientStream
    kernel: object
    zeros: ZeroData = field(default_factory=ZeroData)
    strip_bound: float = DEFAULT_STRIP_BOUND

    def __post_init__(self):
        if isinstance(self.kernel, GammaSpec):
            object.__setattr__(self, "kernel", (self.kernel,))
        elif isinstance(self.kernel, Sequence):
            object.__setattr__(self, "kernel", tuple(self.kernel))
        f1 = self.f.eval(1)
        if abs(f1.imag) > 1e-12:
            raise ValueError(f"f(1) must be real (got {f1})")

    @property
    def symbolic_kernel(self) -> bool:
        return isinstance(self.kernel, tuple)

    def with_zeros(self, zeros: ZeroData, keep_existing: bool = True) -> "LDatum":
        """New datum with ``zeros`` ingested.

        Existing entries (typically pre-populated pole entries) are merged in
        unless ``keep_existing`` is false; coverage is taken from ``zeros``.
        """
        if keep_existing and self.zeros.entries:
            if zeros.mirrored != self.zeros.mirrored and self.zeros.T_max > 0:
                raise CoverageError("cannot merge zero data with mixed mirror conventions")
            entries = _merge_entries(
                list(self.zeros.entries) + list(zeros.entries)
            )
            zeros = ZeroData(tuple(entries), T_max=zeros.T_max, mirrored=zeros.mirrored)
        return replace(self, zeros=zeros)


# ---------------------------------------------------------------------------
# Kernel evaluation and degree.


def kernel_eval(F: LDatum, x):
    """Kernel ``K(x)`` at ``x > 0`` (scalar or array).

    For GammaSpec kernels this is
    ``sum_spec weight * sum_j exp(-(1/2 + mu_j) x) / (1 - exp(-2x))``,
    with the denominator computed via ``expm1`` so that ``x K(x)`` stays
    accurate down to x ~ 1e-300.
    """
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xs <= 0):
        raise ValueError("kernel_eval requires x > 0")
    if not F.symbolic_kernel:
        values = np.asarray(F.kernel(xs), dtype=complex)
    else:
        denom = -np.expm1(-2.0 * xs)
        values = np.zeros_like(xs, dtype=complex)
        for spec in F.kernel:
            for mu in spec.shifts:
                values += spec.weight * np.exp(-(0.5 + mu) * xs) / denom
    return complex(values[0]) if scalar else values


def degree(F: LDatum) -> float:
    """Degree ``d_F = 2 lim_{x->0+} x K(x)``.

    GammaSpec kernels take the exact path: each Gamma_R factor contributes
    1/2 to the limit, so ``d = sum_spec weight * len(shifts)``.  Opaque
    kernels fall back to Richardson extrapolation.
    """
    if F.symbolic_kernel:
        return float(sum(spec.weight * len(spec.shifts) for spec in F.kernel))
    return degree_numeric(F)[0]


def degree_numeric(F: LDatum, k_min: int = 4, k_max: int = 20) -> tuple[float, float]:
    """Richardson extrapolation of ``2 x K(x)`` at ``x = 2^-k``.

    Returns ``(value, error_estimate)``; raises if the table fails to settle.
    """
    xs = 0.5 ** np.arange(k_min, k_max + 1, dtype=float)
    ys = 2.0 * xs * np.asarray(kernel_eval(F, xs), dtype=complex)
    if np.max(np.abs(ys.imag)) > 1e-8 * max(1.0, np.max(np.abs(ys.real))):
        raise ValueError("x K(x) has a non-real limit; not a valid degree datum")
    table = list(ys.real)
    estimate = None
    prev_diag = table[-1]
    depth = min(8, len(table) - 1)
    for j in range(1, depth + 1):
        factor = 2.0 ** j
        table = [
            (factor * table[i + 1] - table[i]) / (factor - 1.0)
            for i in range(len(table) - 1)
        ]
        diag = table[-1]
        estimate = abs(diag - prev_diag)
        prev_diag = diag
    if estimate is None or not math.isfinite(prev_diag):
        raise ValueError("Richardson extrapolation of the degree did not converge")
    return float(prev_diag), float(max(estimate, 1e-15))


def conductor(F: LDatum) -> float:
    """Analytic conductor ``Q_F = exp(-2 f(1))``."""
    return math.exp(-2.0 * F.f.eval(1).real)


# ---------------------------------------------------------------------------
# Linear structure.


def _merge_entries(pairs: Iterable) -> list:
    items = []
    for p in pairs:
        if isinstance(p, MultiplicityEntry):
            items.append((p.z, p.m))
        else:
            items.append((complex(p[0]), float(p[1])))
    items.sort(key=lambda t: (t[0].real, t[0].imag))
    merged: list[MultiplicityEntry] = []
    for z, m in items:
        if merged and abs(z - merged[-1].z) <= MERGE_TOLERANCE:
            merged[-1] = MultiplicityEntry(merged[-1].z, merged[-1].m + m)
        else:
            merged.append(MultiplicityEntry(z, m))
    return [e for e in merged if abs(e.m) > 1e-12]


def combine(terms: Sequence[tuple[float, LDatum]]) -> LDatum:
    """Componentwise real-weighted sum of L-data.

    Coefficient streams and kernels add with their weights; multiplicity
    entries at coinciding points (within ``MERGE_TOLERANCE``) merge by adding
    weighted multiplicities, and entries whose multiplicity cancels are
    dropped.  Merged coverage is the minimum of the inputs' coverages;
    mixing covered and uncovered zero data is an error.
    """
    terms = [(float(w), F) for w, F in terms]
    if not terms:
        raise ValueError("combine requires at least one term")
    for w, _ in terms:
        if not math.isfinite(w):
            raise ValueError("combination weights must be finite reals")

    f = linear_combination([(w, F.f) for w, F in terms], kind="f")

    if all(F.symbolic_kernel for _, F in terms):
        kernel = tuple(
            GammaSpec(spec.log_conductor, spec.shifts, weight=w * spec.weight)
            for w, F in terms
            for spec in F.kernel
        )
    else:
        parts = [(w, F) for w, F in terms]

        def kernel(x, parts=parts):
            return sum(w * kernel_eval(F, x) for w, F in parts)

    t_values = [F.zeros.T_max for _, F in terms]
    positive = [t for t in t_values if t > 0]
    if positive and len(positive) != len(t_values):
        raise CoverageError(
            "cannot combine data with and without zero coverage (empty merged coverage)"
        )
    t_max = min(t_values) if t_values else 0.0

    mirrored = all(F.zeros.mirrored for _, F in terms)
    pairs = []
    for w, F in terms:
        source = F.zeros.entries if mirrored else F.zeros.expanded()
        pairs.extend((e.z, w * e.m) for e in source)
    entries = _merge_entries(pairs)

    zeros = ZeroData(tuple(entries), T_max=t_max, mirrored=mirrored)
    strip = max(F.strip_bound for _, F in terms)
    return LDatum(f=f, kernel=kernel, zeros=zeros, strip_bound=strip)


# ---------------------------------------------------------------------------
# Diagnostics.


def positivity_report(F: LDatum, threshold: int = 10) -> Report:
    """Count negative multiplicities within coverage.

    Positive L-data have only finitely many poles, so a handful of negative
    entries (at most ``threshold``) is consistent with positivity; a count
    above the threshold that does not thin out toward the edge of coverage
    is flagged as "not positive".
    """
    report = Report(title="positivity")
    expanded = F.zeros.expanded()
    negatives = [e for e in expanded if e.m < 0]
    report.add("negative entries", len(negatives))
    report.add("locations", [e.z for e in negatives[:20]])
    t = F.zeros.T_max
    if len(negatives) <= threshold:
        report.verdict = "positive within coverage"
    else:
        inner = sum(1 for e in negatives if abs(e.z.real) <= 0.5 * t)
        outer = len(negatives) - inner
        growing = t == 0 or outer >= 0.5 * inner
        report.add("negatives in inner half", inner)
        report.add("negatives in outer half", outer)
        report.verdict = "not positive" if growing else "positive within coverage"
    return report


def axiom_report(F: LDatum, N: int, nonintegral_cap: int = 64) -> Report:
    """Numerical checks of the growth, degree, and multiplicity axioms."""
    if N < 100:
        raise ValueError("axiom_report needs N >= 100")
    report = Report(title="axiom checks")

    growth = growth_diagnostics(F.f, N)
    report.add("growth slope", growth.fields.get("final slope"))
    for w in growth.warnings:
        report.warn(w)
    report.add("axiom 1 (growth)", "warn" if growth.warnings else "pass")

    probe = np.array([1e-2, 1e-4, 1e-6])
    xk = probe * np.asarray(kernel_eval(F, probe), dtype=complex)
    d1 = abs(xk[1] - xk[0])
    d2 = abs(xk[2] - xk[1])
    scale = max(1.0, float(np.max(np.abs(xk))))
    continuity_ok = d2 <= 0.5 * d1 + 1e-10 * scale
    real_ok = abs(xk[-1].imag) <= 1e-8 * scale
    report.add("x*K(x) probes", [complex(v) for v in xk])
    if not continuity_ok:
        report.warn("degree: x*K(x) does not settle as x -> 0+")
    if not real_ok:
        report.warn("degree: limit of x*K(x) is not real")
    report.add("axiom 2 (degree)", "pass" if (continuity_ok and real_ok) else "warn")

    expanded = F.zeros.expanded()
    strip_violations = [
        e for e in expanded if abs(e.z.imag) > F.strip_bound + 1e-12
    ]
    nonintegral = [
        e for e in expanded if abs(e.m - round(e.m)) > 1e-9
    ]
    report.add("strip violations", len(strip_violations))
    report.add("non-integral multiplicities", len(nonintegral))
    if strip_violations:
        report.warn(
            f"multiplicity: {len(strip_violations)} entries outside strip "
            f"|Im z| <= {F.strip_bound}"
        )
    if len(nonintegral) > nonintegral_cap:
        report.warn(
            f"multiplicity: {len(nonintegral)} non-integral entries exceeds "
            f"cap {nonintegral_cap}"
        )
    ok3 = not strip_violations and len(nonintegral) <= nonintegral_cap
    report.add("axiom 3 (multiplicity)", "pass" if ok3 else "warn")

    report.verdict = "pass" if report.clean else "warn"
    return report
