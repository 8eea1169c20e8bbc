"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines.
"""

import json
import math
import time

import numpy as np
import scipy.integrate

from ldata import (
    CoefficientStream,
    LDatum,
    NonPrimitiveCharacterError,
    TwistSpec,
    ZeroData,
    build_dirichlet,
    build_from_spec,
    build_zeta,
    combine,
    conductor,
    degree,
    degree_numeric,
    exp_transform,
    gamma_asymptotics,
    linear_combination,
    log_transform,
    match_character,
    detect_periodicity,
    primitive_characters,
    s_sum,
    twist_sum,
    vanishing_order_gate,
    verify,
    zero_side,
)
from ldata.cli import main as cli_main

EULER_GAMMA = 0.5772156649015328606


def _report(number: int, ok: bool, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {number}: {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_zeta_explicit_formula(zeta_zeros, canonical_bump):
    start = time.perf_counter()
    F = build_zeta(zeros=zeta_zeros)
    report = verify(F, canonical_bump, tolerance=1e-4)
    elapsed = time.perf_counter() - start

    first_100 = ZeroData(zeta_zeros.entries[:100],
                         T_max=zeta_zeros.entries[99].z.real, mirrored=True)
    report_100 = verify(build_zeta(zeros=first_100), canonical_bump, tolerance=1e-4)

    ok = (report.residual < 1e-4
          and report_100.residual >= 10.0 * report.residual
          and elapsed < 10.0)
    _report(1, ok,
            f"zeta EF residual {report.residual:.3e} < 1e-4, "
            f"100-zero residual {report_100.residual:.3e} "
            f"({report_100.residual / report.residual:.0f}x larger), "
            f"runtime {elapsed:.2f}s < 10s")


def test_criterion_2_linearity(zeta_datum, canonical_bump):
    base = verify(zeta_datum, canonical_bump)
    base_signed = base.zero_side - base.arithmetic_side
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(5):
        t1, t2 = rng.uniform(-2.0, 2.0, 2)
        combo = combine([(t1, zeta_datum), (t2, zeta_datum)])
        rep = verify(combo, canonical_bump)
        expected = abs(t1 + t2) * base.residual
        worst = max(worst, abs(rep.residual - expected))
        signed = rep.zero_side - rep.arithmetic_side
        worst = max(worst, abs(signed - (t1 + t2) * base_signed))
    _report(2, worst <= 1e-12,
            f"combined EF residual matches (t1+t2) * zeta residual, "
            f"max deviation {worst:.2e} <= 1e-12")


def test_criterion_3_degree(zeta_datum):
    chi4 = build_dirichlet(4, primitive_characters(4)[0].index)
    three_shift = build_from_spec(0.0, [0.0, 0.0, 1.0], CoefficientStream.zero("f"))
    cases = [
        (zeta_datum, 1.0),
        (chi4, 1.0),
        (combine([(1.0, build_zeta()), (1.0, chi4)]), 2.0),
        (combine([(0.5, three_shift)]), 1.5),
    ]
    worst_analytic = max(abs(degree(F) - expected) for F, expected in cases)
    worst_numeric = max(abs(degree_numeric(F)[0] - expected) for F, expected in cases)
    ok = worst_analytic <= 1e-12 and worst_numeric <= 1e-4
    _report(3, ok,
            f"degrees (1, 1, 2, 1.5): analytic deviation {worst_analytic:.2e} "
            f"<= 1e-12, Richardson deviation {worst_numeric:.2e} <= 1e-4")


def test_criterion_4_conductor():
    F = build_zeta()
    f1 = F.f.eval(1).real
    # Gauss closed form: psi(1/4) = -gamma - 3 log 2 - pi/2.
    psi_quarter = -EULER_GAMMA - 3.0 * math.log(2.0) - math.pi / 2.0
    f1_closed = 0.5 * math.log(math.pi) - 0.5 * psi_quarter
    q = conductor(F)
    rel_f1 = abs(f1 - f1_closed) / abs(f1_closed)
    rel_q = abs(q - math.exp(-2.0 * f1_closed)) / math.exp(-2.0 * f1_closed)
    ok = rel_f1 <= 1e-10 and rel_q <= 1e-10
    _report(4, ok,
            f"Q(zeta) = exp(-2 f(1)) with f(1) = {f1:.10f} vs Gauss-digamma "
            f"closed form, relative error {max(rel_f1, rel_q):.2e} <= 1e-10")


def test_criterion_5_coefficient_algebra():
    N = 10_000
    a = exp_transform(build_zeta().f, N)
    ones_err = float(np.max(np.abs(a.values(N) - 1.0)))

    rng = np.random.default_rng(103)
    roundtrip_err = 0.0
    for _ in range(50):
        size = int(rng.integers(5, 101))
        values = rng.uniform(-1, 1, size) + 1j * rng.uniform(-1, 1, size)
        values[0] = values[0].real
        f = CoefficientStream.from_values(values, "f")
        back = log_transform(exp_transform(f, size), size)
        roundtrip_err = max(
            roundtrip_err,
            max(abs(back(n) - f(n)) for n in range(2, size + 1)),
        )

    half = linear_combination([(0.5, build_zeta().f)])
    a4 = exp_transform(half, 4)(4)
    half_err = abs(a4 - 0.375)

    ok = ones_err <= 1e-10 and roundtrip_err <= 1e-12 and half_err <= 1e-12
    _report(5, ok,
            f"zeta a(n)=1 to {ones_err:.2e} (N=10^4), 50 roundtrips to "
            f"{roundtrip_err:.2e}, half-weight a(4)=3/8 to {half_err:.2e}")


def test_criterion_6_twists(zeta_datum):
    closed_err = 0.0
    for y in (0.5, 1.0, 2.0):
        value = s_sum(zeta_datum, 1j * y).value
        closed = 1.0 / (math.exp(2.0 * math.pi * y) - 1.0)
        closed_err = max(closed_err, abs(value - closed))

    spec = TwistSpec((1.0,), (1.0,))
    rng = np.random.default_rng(107)
    three_shift = build_from_spec(0.0, [0.0, 1.0], CoefficientStream.zero("f"))
    agreement = 0.0
    for k in range(20):
        z = complex(rng.uniform(-1, 1), rng.uniform(0.4, 2.5))
        F = zeta_datum if k % 2 == 0 else three_shift
        agreement = max(agreement,
                        abs(twist_sum(F, z, spec).value - s_sum(F, z).value))

    ok = closed_err <= 1e-12 and agreement <= 1e-13
    _report(6, ok,
            f"S(iy) closed form to {closed_err:.2e} <= 1e-12, twist([1],[1]) "
            f"matches s_sum to {agreement:.2e} <= 1e-13 on 20 random inputs")


def test_criterion_7_gamma_asymptotics():
    zero = CoefficientStream.zero("f")
    specs = [
        (build_zeta(), 1.0),
        (build_from_spec(math.log(4.0), [1.0], zero), 1.0),
        (build_from_spec(0.0, [0.0, 1.0], zero), 2.0),
        (combine([(0.5, build_from_spec(0.0, [0.0, 0.0, 1.0], zero))]), 1.5),
        (combine([(0.7, build_from_spec(math.log(3.0), [0.0, 1.0], zero))]), 1.4),
    ]
    worst = max(abs(gamma_asymptotics(F, order=4).d - expected)
                for F, expected in specs)

    residuals = [gamma_asymptotics(build_zeta(), order=k).fit_residual
                 for k in range(1, 6)]
    decreasing = all(r2 < r1 or max(r1, r2) < 1e-11
                     for r1, r2 in zip(residuals, residuals[1:]))

    ok = worst <= 1e-6 and decreasing
    _report(7, ok,
            f"fitted d matches weighted shift count to {worst:.2e} <= 1e-6 on "
            f"five specs; fit residuals {['%.1e' % r for r in residuals]} decrease")


def test_criterion_8_classifier():
    recovered = True
    for q in range(1, 21):
        for chi in primitive_characters(q):
            stream = CoefficientStream.from_function(lambda n, c=chi: c(n), "a")
            period = detect_periodicity(stream, 200, 25)
            match = match_character(stream, q, 200)
            good = (match is not None and match.modulus == q
                    and match.index == chi.index and match.t == 0.0
                    and (period is None or q % period == 0))
            recovered = recovered and good

    chi4 = primitive_characters(4)[0]
    shifted = CoefficientStream.from_function(lambda n: chi4(n) * n ** (-0.5j), "a")
    match = match_character(shifted, 4, 200)
    shift_ok = match is not None and abs(match.t - 0.5) <= 1e-6

    gates = all(vanishing_order_gate(*pair).holds
                for pair in ((163, 82), (3, 2), (4, 3)))

    ok = recovered and shift_ok and gates
    _report(8, ok,
            "all primitive characters q <= 20 recovered exactly with t = 0; "
            f"shifted stream gives t = {match.t if match else None}; "
            "vanishing-order gates (163,82), (3,2), (4,3) all hold")


def test_criterion_9_negative_controls(zeta_zeros, canonical_bump, tmp_path):
    F = build_zeta(zeros=zeta_zeros)
    stripped = LDatum(f=F.f, kernel=F.kernel, zeros=zeta_zeros)
    shift = (zero_side(stripped, canonical_bump).value
             - zero_side(F, canonical_bump).value)
    cosh_integral = scipy.integrate.quad(
        lambda x: canonical_bump.g(np.array([x]))[0] * math.cosh(0.5 * x),
        0.0, 1.0, epsabs=1e-13,
    )[0]
    pole_ok = abs(shift - 4.0 * cosh_integral) <= 1e-8

    try:
        build_dirichlet(4, 0)  # index 0 mod 4 is induced from mod 1
        nonprimitive_ok = False
    except NonPrimitiveCharacterError:
        nonprimitive_ok = True

    spec = tmp_path / "zeta.json"
    spec.write_text(json.dumps({"kind": "zeta"}))
    exit_code = cli_main(["verify", str(spec), "--tol", "1e-30"])
    tol_ok = exit_code == 1

    ok = pole_ok and nonprimitive_ok and tol_ok
    _report(9, ok,
            f"pole omission shifts zero side by 4*int g cosh(x/2) "
            f"(|delta| = {abs(shift - 4.0 * cosh_integral):.2e} <= 1e-8); "
            "non-primitive character raises; verify --tol 1e-30 exits 1")
