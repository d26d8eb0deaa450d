"""Seeded instance generators.

Each instance index gets its own ``numpy`` generator spawned from
``SeedSequence(master_seed, spawn_key=(index,))``, so instance ``k`` is the
same no matter which other instances are generated, or in what order.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .bn_operator import BnParams, is_admissible
from .inequalities import InstanceSpec
from .norms import NormOrder
from .poly_core import DomainError, Polynomial, from_zeros

DEFAULT_SEED = 20120511


@dataclass(frozen=True)
class GeneratorConfig:
    master_seed: int = DEFAULT_SEED
    degree_range: tuple[int, int] = (1, 8)
    zero_modulus_range_outside: tuple[float, float] = (1.0, 4.0)
    zero_modulus_range_inside: tuple[float, float] = (0.1, 1.0)
    R_range: tuple[float, float] = (1.01, 4.0)
    R_grid: tuple[float, ...] = (1.01, 1.5, 2.0, 4.0)
    p_grid: tuple = (0, 0.5, 1, 2, 4)
    # share of the nonvanishing family drawn as a z^n + b, with a zero
    # pinned to the circle, and with fewer than n finite zeros
    extremal_share: float = 0.1
    boundary_share: float = 0.1
    deficient_share: float = 0.05

    def __post_init__(self):
        lo, hi = self.degree_range
        if not 1 <= lo <= hi:
            raise DomainError("degree_range must satisfy 1 <= lo <= hi")
        olo, ohi = self.zero_modulus_range_outside
        if not 1.0 <= olo <= ohi:
            raise DomainError("outside zero moduli must satisfy 1 <= lo <= hi")
        ilo, ihi = self.zero_modulus_range_inside
        if not 0.0 <= ilo <= ihi <= 1.0:
            raise DomainError("inside zero moduli must satisfy 0 <= lo <= hi <= 1")
        rlo, rhi = self.R_range
        if not 1.0 < rlo <= rhi:
            raise DomainError("R_range must satisfy 1 < lo <= hi")
        if any(r <= 1 for r in self.R_grid):
            raise DomainError("R_grid values must exceed 1")
        if not self.p_grid:
            raise DomainError("p_grid must be non-empty")
        for p in self.p_grid:
            NormOrder.parse(p)

    def to_dict(self) -> dict:
        d = asdict(self)
        for k, v in d.items():
            if isinstance(v, tuple):
                d[k] = list(v)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GeneratorConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise DomainError(f"unknown generator fields: {sorted(unknown)}")
        kw = {k: tuple(v) if isinstance(v, list) else v for k, v in d.items()}
        return cls(**kw)

    @classmethod
    def from_json(cls, text: str) -> "GeneratorConfig":
        return cls.from_dict(json.loads(text))


def instance_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(index,)))


def _unit(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def _log_uniform(rng, lo: float, hi: float, size: int) -> np.ndarray:
    if lo <= 0:
        return lo + (hi - lo) * rng.random(size)
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size))


def gen_nonvanishing(n: int, rng: np.random.Generator, forced=(),
                     modulus_range: tuple[float, float] = (1.0, 4.0)) -> Polynomial:
    """Degree-n polynomial with every zero in |z| >= 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    forced = [complex(z) for z in forced]
    if any(abs(z) < 1 - 1e-12 for z in forced):
        raise DomainError("forced zeros must lie in |z| >= 1")
    k = n - len(forced)
    mods = _log_uniform(rng, *modulus_range, k)
    angles = 2 * np.pi * rng.random(k)
    zeros = forced + list(mods * np.exp(1j * angles))
    return from_zeros(zeros, _unit(rng), n)


def gen_all_in_disk(n: int, rng: np.random.Generator, forced=(),
                    modulus_range: tuple[float, float] = (0.1, 1.0)) -> Polynomial:
    """Degree-n polynomial with every zero in |z| <= 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    forced = [complex(z) for z in forced]
    if any(abs(z) > 1 + 1e-12 for z in forced):
        raise DomainError("forced zeros must lie in |z| <= 1")
    k = n - len(forced)
    mods = _log_uniform(rng, *modulus_range, k)
    angles = 2 * np.pi * rng.random(k)
    zeros = forced + list(mods * np.exp(1j * angles))
    return from_zeros(zeros, _unit(rng), n)


def gen_arbitrary(n: int, rng: np.random.Generator) -> Polynomial:
    c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
    return Polynomial(c, n)


def gen_disk_scalar(rng: np.random.Generator) -> complex:
    """Area-uniform on the closed unit disk, with 10% exact zeros and 10% on the circle."""
    u = rng.random()
    if u < 0.1:
        return 0j
    if u < 0.2:
        return _unit(rng)
    return math.sqrt(rng.random()) * _unit(rng)


def _axis_params(n: int, rng: np.random.Generator) -> BnParams:
    c = gen_disk_scalar(rng)
    while c == 0:
        c = gen_disk_scalar(rng)
    # l2 alone is the zero operator on P_1
    axis = int(rng.integers(0, 3 if n >= 2 else 2))
    lam = [0j, 0j, 0j]
    lam[axis] = c
    return BnParams(*lam, n)


def gen_admissible_params(n: int, rng: np.random.Generator,
                          max_draws: int = 10_000) -> BnParams:
    if rng.random() < 0.5:
        return _axis_params(n, rng)
    for _ in range(max_draws):
        lam = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        if n == 1:
            lam[2] = 0
        if not np.any(lam):
            continue
        params = BnParams(*lam, n)
        if is_admissible(params).admissible:
            return params
    return _axis_params(n, rng)


def extremal(a: complex, b: complex, n: int) -> Polynomial:
    """``a z**n + b`` with |a| = |b| = 1."""
    if abs(abs(a) - 1) > 1e-12 or abs(abs(b) - 1) > 1e-12:
        raise DomainError("extremal polynomials need |a| = |b| = 1")
    c = np.zeros(n + 1, dtype=complex)
    c[0] += b
    c[n] += a
    return Polynomial(c, n)


def _nonvanishing_family(n, rng, cfg: GeneratorConfig) -> tuple[Polynomial, str]:
    u = rng.random()
    if u < cfg.extremal_share:
        return extremal(_unit(rng), _unit(rng), n), "extremal"
    u -= cfg.extremal_share
    if u < cfg.boundary_share:
        return gen_nonvanishing(n, rng, forced=[_unit(rng)],
                                modulus_range=cfg.zero_modulus_range_outside), "boundary"
    u -= cfg.boundary_share
    if u < cfg.deficient_share:
        k = int(rng.integers(0, n))
        P = gen_nonvanishing(max(k, 1), rng, modulus_range=cfg.zero_modulus_range_outside)
        if k == 0:
            P = Polynomial([_unit(rng) * (1 + 3 * rng.random())], 0)
        return Polynomial(P.coeffs, n), "deficient"
    return gen_nonvanishing(n, rng, modulus_range=cfg.zero_modulus_range_outside), "generic"


def make_instance(cfg: GeneratorConfig, index: int, family: str) -> InstanceSpec:
    """Instance ``index`` of ``family`` (nonvanishing, in_disk or arbitrary).

    The shared draws (degree, operator, alpha, delta, R, p) come first and in
    a fixed order, so every family sees the same operator and scalars at the
    same index; only the polynomial differs.
    """
    rng = instance_rng(cfg.master_seed, index)
    lo, hi = cfg.degree_range
    n = int(rng.integers(lo, hi + 1))
    params = gen_admissible_params(n, rng)
    alpha = gen_disk_scalar(rng)
    delta = gen_disk_scalar(rng)
    if cfg.R_grid:
        R = float(cfg.R_grid[int(rng.integers(0, len(cfg.R_grid)))])
    else:
        R = float(rng.uniform(*cfg.R_range))
    p = NormOrder.parse(cfg.p_grid[int(rng.integers(0, len(cfg.p_grid)))])
    poly_rng = np.random.default_rng(rng.integers(0, 2 ** 63))
    if family == "nonvanishing":
        P, tag = _nonvanishing_family(n, poly_rng, cfg)
    elif family == "in_disk":
        P, tag = gen_all_in_disk(n, poly_rng,
                                 modulus_range=cfg.zero_modulus_range_inside), "in_disk"
    elif family == "arbitrary":
        P, tag = gen_arbitrary(n, poly_rng), "arbitrary"
    else:
        raise DomainError(f"unknown family {family!r}")
    return InstanceSpec(P, params, alpha, delta, R, p, cfg.master_seed, index, tag)


def make_abc(cfg: GeneratorConfig, index: int) -> dict:
    rng = instance_rng(cfg.master_seed, index)
    A = float(rng.uniform(0, 4))
    B = float(A * rng.random())
    C = float((A - B) * rng.random())
    return {"A": A, "B": B, "C": C}
