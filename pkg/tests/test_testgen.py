from collections import Counter

import numpy as np
import pytest

from bnverify.bn_operator import BnParams, is_admissible
from bnverify.poly_core import DomainError, classify_zeros, roots
from bnverify.testgen import (GeneratorConfig, extremal, gen_admissible_params, gen_all_in_disk,
                              gen_disk_scalar, gen_nonvanishing, instance_rng, make_abc,
                              make_instance)

CFG = GeneratorConfig()


def test_forced_zero_examples():
    P = gen_nonvanishing(1, instance_rng(0, 0), forced=[-2])
    lead = P.coeffs[1]
    assert abs(abs(lead) - 1) < 1e-15
    assert np.allclose(P.coeffs / lead, [2, 1])
    Q = gen_all_in_disk(3, instance_rng(0, 1), forced=[0])
    assert Q.coeffs[0] == 0
    with pytest.raises(DomainError):
        gen_nonvanishing(2, instance_rng(0, 0), forced=[0.5])
    with pytest.raises(DomainError):
        gen_all_in_disk(2, instance_rng(0, 0), forced=[1.5])


def test_generated_zero_locations():
    for i in range(100):
        rng = instance_rng(9, i)
        n = int(rng.integers(1, 9))
        assert np.abs(roots(gen_nonvanishing(n, rng)).roots).min() >= 1 - 1e-9
        assert np.abs(roots(gen_all_in_disk(n, rng)).roots).max() <= 1 + 1e-9


def test_seed_determinism():
    for fam in ("nonvanishing", "in_disk", "arbitrary"):
        a = make_instance(CFG, 17, fam)
        b = make_instance(CFG, 17, fam)
        assert a.poly.coeffs.tobytes() == b.poly.coeffs.tobytes()
        assert a.to_dict() == b.to_dict()
    assert make_abc(CFG, 3) == make_abc(CFG, 3)


def test_instances_independent_of_generation_order():
    forward = [make_instance(CFG, i, "nonvanishing").to_dict() for i in range(10)]
    backward = [make_instance(CFG, i, "nonvanishing").to_dict() for i in reversed(range(10))]
    assert forward == backward[::-1]


def test_families_share_operator_and_scalars():
    for i in range(20):
        a = make_instance(CFG, i, "nonvanishing")
        b = make_instance(CFG, i, "arbitrary")
        assert (a.params, a.alpha, a.delta, a.R, a.p) == (b.params, b.alpha, b.delta, b.R, b.p)


def test_admissible_params_examples():
    rng = np.random.default_rng(0)
    for n in (1, 3, 8):
        assert is_admissible(BnParams(0.3 - 0.1j, 0, 0, n)).admissible
        assert is_admissible(BnParams(0, 0.7j, 0, n)).admissible
    for i in range(300):
        rng = instance_rng(4, i)
        n = int(rng.integers(1, 9))
        params = gen_admissible_params(n, rng)
        assert params.n == n
        assert is_admissible(params).worst_slack >= -1e-12


def test_disk_scalars():
    rng = np.random.default_rng(1)
    draws = np.array([gen_disk_scalar(rng) for _ in range(2000)])
    assert np.abs(draws).max() <= 1 + 1e-15
    assert np.mean(draws == 0) > 0.05
    assert np.mean(np.abs(np.abs(draws) - 1) < 1e-15) > 0.05


def test_extremal_examples():
    assert np.allclose(extremal(1, 1, 3).coeffs, [1, 0, 0, 1])
    P = extremal(1, -1, 4)
    assert classify_zeros(P).min_modulus == pytest.approx(1.0)
    assert np.allclose(extremal(1j, 1, 2).coeffs, [1, 0, 1j])
    with pytest.raises(DomainError):
        extremal(2, 1, 2)


def test_coverage_of_suite_defaults():
    insts = [make_instance(CFG, i, "nonvanishing") for i in range(500)]
    assert {x.n for x in insts} == set(range(1, 9))
    assert {x.R for x in insts} == set(CFG.R_grid)
    assert {x.p.to_json_value() for x in insts} == {0, 0.5, 1.0, 2.0, 4.0}
    tags = Counter(x.family for x in insts)
    assert set(tags) == {"generic", "extremal", "boundary", "deficient"}
    for x in insts:
        assert classify_zeros(x.poly).none_in_open_disk


def test_config_round_trip_and_validation():
    cfg = GeneratorConfig(master_seed=5, degree_range=(2, 3))
    assert GeneratorConfig.from_dict(cfg.to_dict()) == cfg
    with pytest.raises(DomainError):
        GeneratorConfig.from_dict({"bogus": 1})
    with pytest.raises(DomainError):
        GeneratorConfig(degree_range=(0, 3))
    with pytest.raises(DomainError):
        GeneratorConfig(R_grid=(1.0,))


def test_abc_scalars_satisfy_hypothesis():
    for i in range(100):
        d = make_abc(CFG, i)
        assert d["A"] >= 0 and d["B"] >= 0 and d["C"] >= 0
        assert d["B"] + d["C"] <= d["A"]
