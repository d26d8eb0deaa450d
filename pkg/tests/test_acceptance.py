"""The ten acceptance criteria at their stated tolerances.

Each test records a one-line verdict that is printed in the pytest terminal
summary; run ``pytest tests/test_acceptance.py -v`` to see them.
"""

import math
import time
from dataclasses import replace

import numpy as np

from bnverify import bn_operator as bn
from bnverify.bn_operator import BnParams, is_admissible
from bnverify.cli import SuiteConfig, run_suite
from bnverify.inequalities import (CHECKS, HypothesisViolation, InstanceSpec, Status,
                                   check_classical, check_lemma5, lemma5_parseval, lemma5_sides,
                                   reproduce_counterexample, sharpness_scan)
from bnverify.norms import NormOrder, lp_norm, mahler_measure_by_zeros
from bnverify.poly_core import Polynomial, roots
from bnverify.testgen import (GeneratorConfig, gen_admissible_params, gen_all_in_disk,
                              instance_rng, make_instance)

from conftest import record

CFG = GeneratorConfig()


def test_criterion_01_counterexample():
    t0 = time.perf_counter()
    rep = reproduce_counterexample(4, BnParams(0, 1, 0, 4), 2.0)
    dt = time.perf_counter() - t0
    a, b = rep.modulus_composite_of_star, rep.modulus_star_of_composite
    ok = abs(a) <= 1e-10 and abs(b - 8) <= 1e-10 and dt < 1.0
    assert record(1, ok, f"moduli {a:.3g} and {b:.15g}, {dt * 1e3:.1f} ms")


def test_criterion_02_theorem1_suite():
    t0 = time.perf_counter()
    out = run_suite(SuiteConfig(checks=("theorem1",), trials=500))
    dt = time.perf_counter() - t0
    row = out.rows[0]
    ok = row["fail"] == 0 and row["uncertified"] == 0 and out.status == 0 and dt < 120
    assert record(2, ok, f"500 instances: {row['pass']} Pass, {row['equality']} Equality, "
                         f"{row['fail']} Fail, {row['rejected']} rejected, "
                         f"worst rel. margin {row['worst_relative_margin']:.2e}, {dt:.1f} s")
    assert row["worst_relative_margin"] >= -1e-9


def _sharpness_params(n):
    out = [BnParams(1, 0, 0, n), BnParams(0, 1, 0, n), BnParams(0.5, 0.25j, 0, n),
           BnParams(0, 0, 1, n)]
    return [p for p in out if is_admissible(p).admissible]


def test_criterion_03_sharpness():
    worst = {0.5: 0.0, 1: 0.0, 2: 0.0}
    for n in (2, 5):
        for params in _sharpness_params(n):
            rep = sharpness_scan(params, 2.0, [0.5, 1, 2], phase_grid=16)
            for p, gap in rep.by_p.items():
                worst[p] = max(worst[p], gap)
    ok = max(worst.values()) <= 1e-6 and worst[2] <= 1e-9
    assert record(3, ok, "max gap by p: " + ", ".join(f"p={p}: {g:.1e}" for p, g in worst.items()))


def test_criterion_04_norm_oracles():
    one = Polynomial([1, 1])
    l1 = lp_norm(one, NormOrder.power(1)).value
    l2 = lp_norm(one, NormOrder.power(2)).value
    l0 = lp_norm(one, NormOrder.geometric()).value
    two = Polynomial([1, 2])
    quad = lp_norm(two, NormOrder.geometric())
    jensen = mahler_measure_by_zeros(two)
    errs = (abs(l1 - 4 / math.pi), abs(l2 - math.sqrt(2)), abs(l0 - 1),
            abs(quad.value - 2), abs(jensen - 2), abs(quad.value - jensen))
    ok = (errs[0] <= 1e-10 and errs[1] <= 1e-12 and errs[2] <= 1e-8 and errs[3] <= 1e-10
          and errs[4] <= 1e-10 and errs[5] <= 1e-8 and quad.method == "trapezoid")
    assert record(4, ok, "errors " + ", ".join(f"{e:.1e}" for e in errs))


def test_criterion_05_zeros_stay_in_disk():
    worst, count = 0.0, 0
    for i in range(200):
        rng = instance_rng(CFG.master_seed, i)
        n = int(rng.integers(1, 9))
        params = gen_admissible_params(n, rng)
        P = gen_all_in_disk(n, rng)
        BP = bn.apply(params, P)
        if BP.exact_degree() < 1:
            continue
        worst = max(worst, float(np.abs(roots(BP).roots).max()))
        count += 1
    ok = count >= 150 and worst <= 1 + 1e-7
    assert record(5, ok, f"{count} polynomials with zeros, max zero modulus {worst:.12f}")


def test_criterion_06_lemma2_pointwise():
    z = np.exp(2j * np.pi * np.arange(512) / 512)
    worst = math.inf
    for i in range(100):
        rng = instance_rng(CFG.master_seed, i)
        n = int(rng.integers(1, 9))
        P = gen_all_in_disk(n, rng)
        R = (1.5, 2.0)[i % 2]
        ratio = np.abs(P(R * z)) / np.abs(P(z))
        worst = min(worst, float(np.min(ratio - ((R + 1) / 2) ** n)))
    gaps = []
    for n in range(1, 9):
        binom = Polynomial([math.comb(n, k) for k in range(n + 1)])
        for R in (1.5, 2.0):
            gaps.append(abs(abs(binom(R)) / abs(binom(1.0)) - ((R + 1) / 2) ** n))
    ok = worst >= -1e-9 and max(gaps) <= 1e-9
    assert record(6, ok, f"min ratio excess {worst:.3e}, (z+1)^n gap at z=1 {max(gaps):.1e}")


def test_criterion_07_classical_chain():
    fails, counts = 0, {}
    for k in range(1, 9):
        name = f"eq{k}"
        family = CHECKS[name][0]
        accepted = 0
        for i in range(100):
            try:
                res = check_classical(name, make_instance(CFG, i, family))
            except HypothesisViolation:
                continue
            accepted += 1
            fails += res.status is Status.FAIL
        counts[name] = accepted
    extremal_ok = True
    for n in (1, 2, 5, 8):
        zn = InstanceSpec(Polynomial.monomial(n, n), R=2.0)
        c = np.zeros(n + 1)
        c[0] = c[n] = 1
        el = InstanceSpec(Polynomial(c), R=2.0, p=NormOrder.power(2))
        extremal_ok &= check_classical("eq1", zn).status is Status.EQUALITY
        extremal_ok &= check_classical("eq5", el).status is Status.EQUALITY
    ok = fails == 0 and extremal_ok and min(counts.values()) > 0
    assert record(7, ok, f"{fails} Fail over eq1-eq8 (accepted {sum(counts.values())}), "
                         f"extremals Equality: {extremal_ok}")


def test_criterion_08_lemma5():
    fails, accepted, i = 0, 0, 0
    worst_parseval = 0.0
    while accepted < 100:
        inst = make_instance(CFG, i, "nonvanishing")
        i += 1
        try:
            res = check_lemma5(inst, 64)
        except HypothesisViolation:
            continue
        accepted += 1
        fails += res.status in (Status.FAIL, Status.UNCERTIFIED)
        sq = replace(inst, p=NormOrder.power(2))
        for g in (0.0, 2.0, 4.5):
            ref = lemma5_parseval(sq, g)
            worst_parseval = max(worst_parseval, abs(lemma5_sides(sq, g)[0] - ref) / ref)
    ok = fails == 0 and worst_parseval <= 1e-10
    assert record(8, ok, f"{accepted} instances x 64 rotations, {fails} Fail, "
                         f"Parseval rel. agreement {worst_parseval:.1e}")


def test_criterion_09_dual_paths():
    rng = np.random.default_rng(CFG.master_seed)
    worst_apply = worst_star = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        lam = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        params = BnParams(*lam, n)
        P = Polynomial(rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1))
        R = float(rng.uniform(1, 4))
        alpha = complex(rng.standard_normal(), rng.standard_normal()) / 2
        a = bn.apply(params, P).coeffs
        b = bn.apply_via_derivatives(params, P).coeffs
        worst_apply = max(worst_apply, np.abs(a - b).max() / np.abs(a).max())
        s = bn.star_diff(params, P, R, alpha, method="coefficients").coeffs
        t = bn.star_diff(params, P, R, alpha, method="closed_form").coeffs
        worst_star = max(worst_star, np.abs(s - t).max() / np.abs(s).max())
    ok = worst_apply <= 1e-12 and worst_star <= 1e-12
    assert record(9, ok, f"apply {worst_apply:.1e}, star_diff {worst_star:.1e} (relative)")


def test_criterion_10_determinism():
    cfg = SuiteConfig(checks=("theorem1",), trials=500)
    a = run_suite(cfg).jsonl_body
    b = run_suite(cfg).jsonl_body
    ok = a == b and a.count("\n") == 502
    assert record(10, ok, f"two runs, {len(a)} bytes each, identical: {a == b}")
