"""Builders for concrete L-data and their supporting arithmetic objects.

Provides Dirichlet characters with deterministic indexing, the zeta and
Dirichlet-L datum constructors, a generic gamma-spec builder, and the
zero-table reader.  Zero ordinates are inputs, not computed artifacts: the
package bundles a table for zeta (see ``ldata/data/zeta_zeros.txt``) and
reads anything in the same format.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from .coefficient_algebra import (
    CoefficientStream,
    vonmangoldt_stream,
    vonmangoldt_values,
)
from .errors import CoverageError, DomainError, NonPrimitiveCharacterError, ZeroTableError
from .ldatum_core import GammaSpec, LDatum, MultiplicityEntry, ZeroData
from .special_functions import gamma_r_logderiv

#: Largest supported character modulus.
MAX_MODULUS = 10_000

#: Environment variable overriding the bundled-data directory.
DATA_DIR_ENV = "LDATA_DATA_DIR"


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _primitive_root(p: int, e: int) -> int:
    """Primitive root modulo p^e for an odd prime p."""
    phi_p = p - 1
    factors = [r for r, _ in _factorize(phi_p)]
    g = 2
    while True:
        if all(pow(g, phi_p // r, p) != 1 for r in factors):
            break
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _unit_group_components(q: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """Per prime-power component: (p^e, [(generator, order), ...])."""
    comps = []
    for p, e in _factorize(q):
        pe = p ** e
        if p == 2:
            if e == 1:
                gens = []
            elif e == 2:
                gens = [(3, 2)]
            else:
                gens = [(pe - 1, 2), (5, pe // 4)]
        else:
            gens = [(_primitive_root(p, e), pe - pe // p)]
        comps.append((pe, gens))
    return comps


@lru_cache(maxsize=None)
def _component_logs(pe: int, gens: tuple) -> dict:
    """Discrete-log table unit -> exponent tuple for one component."""
    table = {1: (0,) * len(gens)}
    if not gens:
        return table
    exps = [0] * len(gens)
    orders = [s for _, s in gens]
    while True:
        i = 0
        while i < len(exps):
            exps[i] += 1
            if exps[i] < orders[i]:
                break
            exps[i] = 0
            i += 1
        else:
            break
        value = 1
        for (g, _), k in zip(gens, exps):
            value = value * pow(g, k, pe) % pe
        table[value] = tuple(exps)
    return table


class DirichletCharacter:
    """Dirichlet character mod q, indexed by its generator exponent tuple.

    Characters mod q are enumerated by tuples ``(k_1, ..., k_r)`` of
    exponents on the unit-group generators (odd prime powers use a primitive
    root; ``2^e`` with ``e >= 3`` uses ``{-1, 5}``), ordered lexicographically
    with the first component most significant.  ``index`` is the position in
    that order.  Values are roots of unity ``zeta_e^k`` with ``e`` the unit
    group exponent; the exact integer ``k`` is exposed via
    :meth:`value_exponent`.
    """

    def __init__(self, modulus: int, index: int):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        if modulus > MAX_MODULUS:
            raise ValueError(f"modulus {modulus} exceeds supported bound {MAX_MODULUS}")
        self.modulus = modulus
        comps = _unit_group_components(modulus)
        orders = [s for _, gens in comps for _, s in gens]
        n_chars = math.prod(orders) if orders else 1
        if not 0 <= index < n_chars:
            raise ValueError(f"character index {index} out of range 0..{n_chars - 1}")
        self.index = index
        self.zeta_order = math.lcm(*orders) if orders else 1

        # Mixed-radix decode of the index into per-generator exponents.
        rem = index
        exponents = []
        for s in reversed(orders):
            exponents.append(rem % s)
            rem //= s
        exponents.reverse()
        self._exponents = tuple(exponents)

        self._exp_table = self._build_exponent_table(comps, orders)
        self.conductor = self._conductor()
        self.primitive = self.conductor == modulus

    def _build_exponent_table(self, comps, orders) -> np.ndarray:
        q, e = self.modulus, self.zeta_order
        table = np.full(max(q, 1), -1, dtype=np.int64)
        if q == 1:
            table[0] = 0
            return table
        flat_gens = []
        pos = 0
        comp_data = []
        for pe, gens in comps:
            logs = _component_logs(pe, tuple(gens))
            ks = self._exponents[pos: pos + len(gens)]
            ss = [s for _, s in gens]
            comp_data.append((pe, logs, ks, ss))
            pos += len(gens)
        for n in range(q):
            if math.gcd(n, q) != 1:
                continue
            total = 0
            ok = True
            for pe, logs, ks, ss in comp_data:
                xs = logs.get(n % pe)
                if xs is None:
                    ok = False
                    break
                for k, x, s in zip(ks, xs, ss):
                    total += k * x * (e // s)
            if ok:
                table[n] = total % e
        return table

    def _conductor(self) -> int:
        q = self.modulus
        if q == 1:
            return 1
        divisors = sorted(
            d for d in range(1, q + 1) if q % d == 0
        )
        for f in divisors:
            trivial_on_kernel = True
            for n in range(1, q, f):
                k = self._exp_table[n % q]
                if k > 0:
                    trivial_on_kernel = False
                    break
            if trivial_on_kernel:
                return f
        return q

    def value_exponent(self, n: int):
        """Exact exponent k with chi(n) = zeta_e^k, or None on non-units."""
        if self.modulus == 1:
            return 0
        k = self._exp_table[n % self.modulus]
        return None if k < 0 else int(k)

    def __call__(self, n: int) -> complex:
        k = self.value_exponent(n)
        if k is None:
            return 0.0
        e = self.zeta_order
        # Quarter turns evaluate exactly so real characters stay exact.
        if k == 0:
            return 1.0 + 0.0j
        if 2 * k == e:
            return -1.0 + 0.0j
        if 4 * k == e:
            return 1.0j
        if 4 * k == 3 * e:
            return -1.0j
        return complex(np.exp(2j * np.pi * k / e))

    @property
    def values(self) -> np.ndarray:
        """Complex value table on residues 0..q-1 (0 on non-units)."""
        out = np.zeros(self.modulus, dtype=complex)
        for n in range(self.modulus):
            out[n] = self(n)
        return out

    @property
    def is_even(self) -> bool:
        return self.modulus <= 2 or self.value_exponent(self.modulus - 1) == 0

    @property
    def is_real(self) -> bool:
        e = self.zeta_order
        return all(
            k < 0 or k == 0 or 2 * k == e
            for k in (self._exp_table if self.modulus > 1 else [0])
        )

    def __repr__(self):
        return (f"DirichletCharacter(modulus={self.modulus}, index={self.index}, "
                f"conductor={self.conductor})")


def character_group(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, ordered by index."""
    comps = _unit_group_components(q)
    n_chars = math.prod(s for _, gens in comps for _, s in gens) if q > 1 else 1
    return [DirichletCharacter(q, i) for i in range(max(n_chars, 1))]


def primitive_characters(q: int) -> list[DirichletCharacter]:
    return [chi for chi in character_group(q) if chi.primitive]


# ---------------------------------------------------------------------------
# Datum builders.


def _zeta_f_stream() -> CoefficientStream:
    f1 = -gamma_r_logderiv(0.5).real

    def fn(n):
        if n == 1:
            return f1
        lam = vonmangoldt_values(n)[n]
        return lam / math.sqrt(n) if lam else 0.0

    return CoefficientStream(fn, "f", declared_bound=abs(f1))


def build_zeta(zeros: ZeroData | None = None) -> LDatum:
    """L-datum of the completed Riemann zeta function.

    ``f(1) = -Re Gamma_R'/Gamma_R(1/2)``, ``f(n) = Lambda(n)/sqrt(n)``,
    kernel a single Gamma_R factor, and the two pole entries at ``z = +-i/2``
    with multiplicity -1 pre-populated.  Zero ordinates are ingested
    separately (pass ``zeros`` or use :func:`bundled_zeta_zeros`).
    """
    poles = ZeroData(
        entries=(
            MultiplicityEntry(0.5j, -1.0),
            MultiplicityEntry(-0.5j, -1.0),
        ),
        T_max=0.0,
        mirrored=True,
    )
    datum = LDatum(f=_zeta_f_stream(), kernel=GammaSpec(0.0, (0.0,)), zeros=poles)
    if zeros is not None:
        datum = datum.with_zeros(zeros)
    return datum


def build_dirichlet(q: int, index: int, zeros: ZeroData | None = None) -> LDatum:
    """L-datum of a primitive Dirichlet character mod q.

    The archimedean shift is the parity ``a`` of the character, the kernel
    ``GammaSpec(log q, [a])``, ``f(1) = -log(q)/2 - Re Gamma_R'/Gamma_R(1/2 + a)``.
    The completed L-function is entire, so no pole entries are installed.
    For ``q = 1`` this coincides with :func:`build_zeta` minus its poles.
    """
    chi = DirichletCharacter(q, index)
    if not chi.primitive:
        raise NonPrimitiveCharacterError(
            f"character mod {q} with index {index} has conductor {chi.conductor}; "
            "a primitive character is required"
        )
    if q == 1:
        zeta = build_zeta()
        datum = LDatum(f=zeta.f, kernel=zeta.kernel, zeros=ZeroData(mirrored=True))
        return datum.with_zeros(zeros) if zeros is not None else datum

    a = 0.0 if chi.is_even else 1.0
    f1 = -0.5 * math.log(q) - gamma_r_logderiv(0.5 + a).real
    von = vonmangoldt_stream(chi)

    def fn(n):
        return f1 if n == 1 else von.eval(n)

    f = CoefficientStream(fn, "f", declared_bound=max(abs(f1), 1.0))
    datum = LDatum(
        f=f,
        kernel=GammaSpec(math.log(q), (a,)),
        zeros=ZeroData(mirrored=chi.is_real),
    )
    if zeros is not None:
        datum = datum.with_zeros(zeros)
    return datum


def build_from_spec(log_q: float, shifts, f: CoefficientStream,
                    zeros: ZeroData | None = None) -> LDatum:
    """Generic datum from user-supplied archimedean and coefficient data."""
    shifts = tuple(complex(mu) for mu in shifts)
    for mu in shifts:
        if mu.real <= -0.5:
            raise DomainError(f"shift {mu} violates Re mu > -1/2")
    f1 = f.eval(1)
    if abs(f1.imag) > 1e-12:
        raise ValueError(f"f(1) must be real, got {f1}")
    return LDatum(
        f=f,
        kernel=GammaSpec(float(log_q), shifts),
        zeros=zeros if zeros is not None else ZeroData(),
    )


# ---------------------------------------------------------------------------
# Zero tables.


def parse_zero_table(source, mirrored: bool, T_max: float) -> ZeroData:
    """Read a zero table: ``#`` comments, rows ``re_z [im_z [m]]``.

    ``im_z`` defaults to 0 and ``m`` to 1.  Entries must satisfy
    ``|re_z| <= T_max``; with ``mirrored`` set, rows with ``re_z < 0`` are
    rejected by the resulting :class:`ZeroData`.

    ``source`` may be a path or an open file / iterable of lines.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = list(source)

    entries = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) > 3:
            raise ZeroTableError(f"expected 1-3 fields, got {len(parts)}", lineno)
        try:
            values = [float(p) for p in parts]
        except ValueError as exc:
            raise ZeroTableError(f"non-numeric field in {line!r}", lineno) from exc
        re_z = values[0]
        im_z = values[1] if len(values) > 1 else 0.0
        m = values[2] if len(values) > 2 else 1.0
        if abs(re_z) > T_max * (1.0 + 1e-12) + 1e-12:
            raise CoverageError(
                f"line {lineno}: entry at Re z = {re_z} exceeds declared T_max = {T_max}"
            )
        entries.append(MultiplicityEntry(complex(re_z, im_z), m))
    return ZeroData(tuple(entries), T_max=float(T_max), mirrored=mirrored)


def bundled_data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(resources.files("ldata") / "data")


def bundled_zeta_zeros() -> ZeroData:
    """Zero data for zeta from the bundled ordinate table.

    The table lists every ordinate ``0 < gamma <= T_max`` once (mirrored
    convention), currently 658 zeros reaching past height 1000.
    """
    path = bundled_data_dir() / "zeta_zeros.txt"
    if not path.exists():
        raise FileNotFoundError(
            f"bundled zero table not found at {path}; set ${DATA_DIR_ENV} to the "
            "directory holding zeta_zeros.txt"
        )
    ordinates = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            ordinates.append(float(line.split()[0]))
    t_max = max(ordinates)
    entries = tuple(MultiplicityEntry(complex(g, 0.0), 1.0) for g in ordinates)
    return ZeroData(entries, T_max=t_max, mirrored=True)
