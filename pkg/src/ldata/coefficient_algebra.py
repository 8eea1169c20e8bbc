"""Dirichlet-series coefficient algebra.

Streams tagged ``"f"`` carry explicit-formula coefficients (von Mangoldt
type, ``f(n) = c_n / sqrt(n)`` for ``n > 1``); streams tagged ``"a"`` carry
ordinary Dirichlet-series coefficients.  The two are linked by

    sum a(n) n^{-s} = exp( sum_{n>=2} b(n) n^{-s} ),   b(n) = f(n) sqrt(n) / log n,

realized here as an exact convolution recurrence in both directions.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NonPrimitiveCharacterError, NormalizationError
from .reports import Report

#: Hard cap on sieve size.
SIEVE_CAP = 10_000_000

F_STREAM = "f"
A_STREAM = "a"


class CoefficientStream:
    """Lazily evaluated, memoized arithmetic coefficients.

    ``kind`` is ``"f"`` or ``"a"``; ``declared_bound`` is an optional growth
    annotation (a bound on ``|values|``) consumed by tail heuristics.
    Memoization is referentially transparent: repeated evaluation at the same
    index returns the identical value.
    """

    def __init__(self, fn: Callable[[int], complex], kind: str,
                 declared_bound: float | None = None):
        if kind not in (F_STREAM, A_STREAM):
            raise ValueError(f"unknown stream kind {kind!r}")
        self._fn = fn
        self.kind = kind
        self.declared_bound = declared_bound
        self._memo: dict[int, complex] = {}

    def __call__(self, n: int) -> complex:
        return self.eval(n)

    def eval(self, n: int) -> complex:
        if n < 1:
            raise ValueError("coefficient index must be a positive integer")
        value = self._memo.get(n)
        if value is None:
            value = complex(self._fn(n))
            self._memo[n] = value
        return value

    def values(self, N: int) -> np.ndarray:
        """Coefficients 1..N as a complex array (index 0 holds n=1)."""
        return np.array([self.eval(n) for n in range(1, N + 1)], dtype=complex)

    @classmethod
    def from_function(cls, fn, kind, declared_bound=None):
        return cls(fn, kind, declared_bound)

    @classmethod
    def from_values(cls, values: Sequence[complex], kind: str,
                    declared_bound: float | None = None):
        """Stream backed by explicit values for n = 1..len(values), 0 beyond."""
        arr = np.asarray(values, dtype=complex)

        def fn(n, arr=arr):
            return arr[n - 1] if n <= arr.size else 0.0

        return cls(fn, kind, declared_bound)

    @classmethod
    def zero(cls, kind: str = F_STREAM):
        return cls(lambda n: 0.0, kind, declared_bound=0.0)


def linear_combination(terms: Iterable[tuple[float, CoefficientStream]],
                       kind: str | None = None) -> CoefficientStream:
    """Real-weighted sum of streams of a common kind."""
    terms = [(float(w), s) for w, s in terms]
    kinds = {s.kind for _, s in terms}
    if kind is None:
        kind = kinds.pop() if len(kinds) == 1 else F_STREAM
    elif kinds and kinds != {kind}:
        raise ValueError("cannot combine streams of mixed kinds")

    def fn(n):
        return sum(w * s.eval(n) for w, s in terms)

    bounds = [s.declared_bound for _, s in terms]
    bound = None
    if all(b is not None for b in bounds):
        bound = sum(abs(w) * b for (w, _), b in zip(terms, bounds))
    return CoefficientStream(fn, kind, bound)


# ---------------------------------------------------------------------------
# exp/log transforms between f-streams and a-streams.


def _divisor_lists(N: int) -> list:
    divs = [[] for _ in range(N + 1)]
    for d in range(2, N + 1):
        for m in range(d, N + 1, d):
            divs[m].append(d)
    return divs


def exp_transform(f: CoefficientStream, N: int) -> CoefficientStream:
    """Dirichlet-series coefficients a(1..N) of exp of the f-stream series.

    Uses the convolution recurrence
    ``a(n) log n = sum_{d | n, d > 1} f(d) sqrt(d) * a(n/d)``, ``a(1) = 1``.
    Always well-defined; the result is an a-stream supported on 1..N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    c = np.zeros(N + 1, dtype=complex)
    for n in range(2, N + 1):
        c[n] = f.eval(n) * math.sqrt(n)
    divs = _divisor_lists(N)
    a = np.zeros(N + 1, dtype=complex)
    a[1] = 1.0
    for n in range(2, N + 1):
        acc = 0.0 + 0.0j
        for d in divs[n]:
            acc += c[d] * a[n // d]
        a[n] = acc / math.log(n)
    bound = float(np.abs(a[1:]).max()) if N >= 1 else 1.0
    return CoefficientStream.from_values(a[1:], A_STREAM, declared_bound=bound)


def log_transform(a: CoefficientStream, N: int) -> CoefficientStream:
    """Inverse of :func:`exp_transform` up to index N.

    Requires the normalization ``a(1) = 1``.
    """
    a1 = a.eval(1)
    if abs(a1 - 1.0) > 1e-12:
        raise NormalizationError(f"log_transform requires a(1) = 1, got {a1}")
    av = np.zeros(N + 1, dtype=complex)
    for n in range(1, N + 1):
        av[n] = a.eval(n)
    divs = _divisor_lists(N)
    c = np.zeros(N + 1, dtype=complex)
    for n in range(2, N + 1):
        acc = av[n] * math.log(n)
        for d in divs[n]:
            if d < n:
                acc -= c[d] * av[n // d]
        c[n] = acc

    def fn(n):
        if n == 1 or n > N:
            return 0.0
        return c[n] / math.sqrt(n)

    return CoefficientStream(fn, F_STREAM)


# ---------------------------------------------------------------------------
# von Mangoldt streams and growth diagnostics.

_lambda_cache = {"N": 0, "values": np.zeros(1)}


def vonmangoldt_values(N: int) -> np.ndarray:
    """Array of Lambda(n) for n = 0..N (linear sieve, cached)."""
    if N > SIEVE_CAP:
        raise ValueError(f"sieve size {N} exceeds cap {SIEVE_CAP}")
    if N > _lambda_cache["N"]:
        size = max(N, 2 * _lambda_cache["N"], 1024)
        size = min(size, SIEVE_CAP)
        lam = np.zeros(size + 1)
        is_prime = np.ones(size + 1, dtype=bool)
        is_prime[:2] = False
        for p in range(2, size + 1):
            if is_prime[p]:
                is_prime[2 * p::p] = False
                logp = math.log(p)
                q = p
                while q <= size:
                    lam[q] = logp
                    q *= p
        _lambda_cache["N"] = size
        _lambda_cache["values"] = lam
    return _lambda_cache["values"][: N + 1]


def vonmangoldt_stream(chi) -> CoefficientStream:
    """f-stream ``f(n) = Lambda(n) chi(n) / sqrt(n)`` of a primitive character.

    ``f(1)`` is 0 here; datum builders install the archimedean constant.
    """
    if not chi.primitive:
        raise NonPrimitiveCharacterError(
            f"character mod {chi.modulus} (index {chi.index}) is not primitive"
        )

    def fn(n):
        if n == 1:
            return 0.0
        lam = vonmangoldt_values(n)[n]
        if lam == 0.0:
            return 0.0
        return lam * chi(n) / math.sqrt(n)

    return CoefficientStream(fn, F_STREAM)


def _loglog_slopes(xs: Sequence[float], sums: Sequence[float]) -> list[float]:
    slopes = []
    for (x0, s0), (x1, s1) in zip(zip(xs, sums), list(zip(xs, sums))[1:]):
        if s1 <= 0.0 or s0 <= 0.0:
            slopes.append(float("-inf"))
        else:
            slopes.append(math.log(s1 / s0) / math.log(x1 / x0))
    return slopes


def growth_diagnostics(f: CoefficientStream, N: int) -> Report:
    """Diagnostics against the coefficient growth axiom.

    Reports ``max |f(n)| log^k n`` for k = 1..5 and the log-log slope of the
    partial sums of ``|f(n)|^2`` probed at N/100, N/10, N.  A datum whose
    final slope exceeds 0.2 without a decreasing trend is flagged: powers of
    ``log x`` produce slopes that shrink with x, genuine power growth does
    not.
    """
    if N < 100:
        raise ValueError("growth diagnostics need N >= 100")
    values = f.values(N)
    absval = np.abs(values)
    ns = np.arange(1, N + 1, dtype=float)
    logs = np.log(ns)
    report = Report(title="growth diagnostics")
    for k in range(1, 6):
        report.add(f"max |f(n)| log^{k} n", float((absval * logs ** k).max()))
    # n = 1 carries the archimedean constant, not tail growth; probe n >= 2.
    tail_sq = absval ** 2
    tail_sq[0] = 0.0
    sq = np.cumsum(tail_sq)
    probes = [max(2, N // 100), max(3, N // 10), N]
    sums = [float(sq[p - 1]) for p in probes]
    slopes = _loglog_slopes(probes, sums)
    report.add("partial sums |f|^2 at probes", sums)
    report.add("loglog slopes", slopes)
    final = slopes[-1]
    decreasing = final <= slopes[0] - 0.02
    report.add("final slope", final)
    if final > 0.2 and not decreasing:
        report.warn(
            f"growth: |f|^2 partial-sum slope {final:.3f} > 0.2 and not decaying"
        )
        report.verdict = "suspicious"
    else:
        report.verdict = "clean"
    return report
