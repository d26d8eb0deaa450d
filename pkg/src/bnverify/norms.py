"""Norms on the unit circle under the normalized measure dtheta / 2pi.

p = 0 is the geometric mean (Mahler measure), 0 < p < inf the usual
integral mean, p = inf the maximum modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import integrate, special

from .poly_core import DomainError, Polynomial, max_modulus_on_circle, roots, \
    sample_on_circle, zero_clusters

GEOMETRIC = "geometric"
POWER = "power"
SUP = "sup"


@dataclass(frozen=True)
class NormOrder:
    kind: str
    p: float | None = None

    def __post_init__(self):
        if self.kind not in (GEOMETRIC, POWER, SUP):
            raise DomainError(f"unknown norm kind {self.kind!r}")
        if self.kind == POWER:
            if self.p is None or not math.isfinite(self.p) or self.p <= 0:
                raise DomainError(f"power norm needs finite p > 0, got {self.p}")
            object.__setattr__(self, "p", float(self.p))

    @classmethod
    def geometric(cls) -> "NormOrder":
        return cls(GEOMETRIC)

    @classmethod
    def power(cls, p: float) -> "NormOrder":
        return cls(POWER, p)

    @classmethod
    def sup(cls) -> "NormOrder":
        return cls(SUP)

    @classmethod
    def parse(cls, value) -> "NormOrder":
        """Accept 0, a positive number, or inf (also as strings)."""
        if isinstance(value, NormOrder):
            return value
        if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "sup"):
            return cls.sup()
        x = float(value)
        if x == 0:
            return cls.geometric()
        if math.isinf(x) and x > 0:
            return cls.sup()
        return cls.power(x)

    @property
    def is_finite(self) -> bool:
        return self.kind != SUP

    def to_json_value(self):
        if self.kind == GEOMETRIC:
            return 0
        if self.kind == SUP:
            return "inf"
        return self.p

    def __str__(self):
        return str(self.to_json_value())


@dataclass(frozen=True)
class QuadratureSettings:
    initial_nodes: int = 1024
    max_nodes: int = 1 << 20
    rel_tol: float = 1e-11

    def __post_init__(self):
        n0 = self.initial_nodes
        if n0 < 64 or n0 & (n0 - 1):
            raise DomainError("initial_nodes must be a power of two >= 64")
        if self.max_nodes < n0:
            raise DomainError("max_nodes must be >= initial_nodes")
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")


DEFAULT_QUADRATURE = QuadratureSettings()


class NormResult(NamedTuple):
    value: float
    nodes: int
    certified: bool
    method: str


def _power_mean_trapezoid(P: Polynomial, p: float, N: int) -> float:
    return float(np.mean(np.abs(sample_on_circle(P, N)) ** p))


def _near_circle_angles(rr: np.ndarray, band: float) -> np.ndarray:
    near = rr[np.abs(np.abs(rr) - 1.0) <= band]
    return np.sort(np.mod(np.angle(near), 2 * np.pi))


def _power_mean_panels(P: Polynomial, p: float, angles: np.ndarray,
                       rel_tol: float) -> tuple[float, bool, int]:
    """Adaptive Gauss-Kronrod on panels split at near-circle root angles.

    QUADPACK's extrapolation handles the |theta - theta0|^p endpoint
    behaviour that stalls the trapezoid rule at zeros on the circle.
    """
    a = P.coeffs
    brk = np.unique(np.concatenate([[0.0], angles, [2 * np.pi]]))

    def f(t):
        return abs(np.polynomial.polynomial.polyval(np.exp(1j * t), a)) ** p

    total, err, evals = 0.0, 0.0, 0
    for lo, hi in zip(brk[:-1], brk[1:]):
        if hi - lo <= 0:
            continue
        val, e, info = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=1e-13,
                                      limit=400, full_output=1)[:3]
        total += val
        err += e
        evals += info["neval"]
    mean = total / (2 * np.pi)
    ok = err / (2 * np.pi) <= max(rel_tol, 1e-10) * max(mean, 1e-300)
    return mean, ok, evals


def _power_norm(P: Polynomial, p: float, q: QuadratureSettings) -> NormResult:
    scale = float(np.max(np.abs(P.coeffs)))
    Q = P * (1.0 / scale)
    even = float(p).is_integer() and int(p) % 2 == 0
    if even:
        # |P|^p is then a trigonometric polynomial and the rule is exact
        rr = np.empty(0, dtype=complex)
    else:
        rr = roots(Q).roots
    angles = _near_circle_angles(rr, 1e-3)
    dist = float(np.min(np.abs(np.abs(rr) - 1.0))) if rr.size else math.inf
    # trapezoid error decays like exp(-N dist); skip it when max_nodes cannot win
    if even or dist * q.max_nodes > 40.0:
        N = max(q.initial_nodes, 1 << int(math.ceil(math.log2(P.degree_bound + 2))))
        prev = _power_mean_trapezoid(Q, p, N)
        while N < q.max_nodes:
            N *= 2
            cur = _power_mean_trapezoid(Q, p, N)
            if abs(cur - prev) <= q.rel_tol * abs(cur):
                return NormResult(scale * cur ** (1.0 / p), N, True, "trapezoid")
            prev = cur
        if angles.size == 0:
            return NormResult(scale * prev ** (1.0 / p), N, False, "trapezoid")
    mean, ok, evals = _power_mean_panels(Q, p, angles, q.rel_tol)
    return NormResult(scale * mean ** (1.0 / p), evals, ok, "panels")


def mahler_measure_by_zeros(P: Polynomial) -> float:
    """|lead| * prod max(1, |zeta|) over the exact-degree zeros (Jensen)."""
    d = P.exact_degree()
    if d < 0:
        raise DomainError("Mahler measure of the zero polynomial is undefined here")
    # clusters keep multiple zeros on or near the circle accurate
    return float(abs(P.coeffs[d]) * math.prod(max(1.0, abs(c)) ** m
                                              for c, m in zero_clusters(P)))


def _geometric_norm(P: Polynomial, q: QuadratureSettings) -> NormResult:
    scale = float(np.max(np.abs(P.coeffs)))
    Q = P * (1.0 / scale)
    N = max(q.initial_nodes, 1 << int(math.ceil(math.log2(P.degree_bound + 2))))

    def trap(N):
        v = np.abs(sample_on_circle(Q, N))
        if v.min() < 1e-13 * v.max():
            return None
        return float(np.mean(np.log(np.maximum(v, 1e-300))))

    prev = trap(N)
    while prev is not None and N < q.max_nodes:
        N *= 2
        cur = trap(N)
        if cur is None:
            break
        # absolute test in log space == relative test on the norm
        if abs(cur - prev) <= q.rel_tol:
            return NormResult(scale * math.exp(cur), N, True, "trapezoid")
        prev = cur
    return NormResult(mahler_measure_by_zeros(P), N, True, "jensen")


def lp_norm(P: Polynomial, order: NormOrder,
            q: QuadratureSettings = DEFAULT_QUADRATURE,
            sup_tol: float = 1e-12) -> NormResult:
    """Norm with bookkeeping: node count and whether the tolerance was met."""
    if P.is_zero():
        return NormResult(0.0, 0, True, "zero")
    if order.kind == SUP:
        return NormResult(max_modulus_on_circle(P, sup_tol), 4096, True, "grid")
    if P.exact_degree() == 0:
        return NormResult(abs(complex(P.coeffs[0])), 0, True, "constant")
    if order.kind == GEOMETRIC:
        return _geometric_norm(P, q)
    return _power_norm(P, order.p, q)


def circle_lp_norm(P: Polynomial, order: NormOrder,
                   q: QuadratureSettings = DEFAULT_QUADRATURE) -> float:
    return lp_norm(P, order, q).value


def sup_norm_on_circle(P: Polynomial, tol: float = 1e-12) -> float:
    return max_modulus_on_circle(P, tol)


def binomial_norm(A: complex, B: complex, order: NormOrder,
                  q: QuadratureSettings = DEFAULT_QUADRATURE) -> float:
    """Norm of ``A z + B``.

    Only |A| and |B| matter (rotate z). For 0 < p < inf the mean of
    |1 + r e^{it}|^p with r <= 1 is 2F1(-p/2, -p/2; 1; r^2).
    """
    a, b = abs(complex(A)), abs(complex(B))
    big, small = max(a, b), min(a, b)
    if big == 0.0:
        return 0.0
    if order.kind == SUP:
        return a + b
    if order.kind == GEOMETRIC:
        return big
    p = order.p
    r = small / big
    return big * float(special.hyp2f1(-p / 2, -p / 2, 1.0, r * r)) ** (1.0 / p)


def one_plus_z_norm(order: NormOrder) -> float:
    """``||1 + z||_p``; for finite p > 0 this is (Gamma(1+p)/Gamma(1+p/2)^2)^(1/p)."""
    if order.kind == SUP:
        return 2.0
    if order.kind == GEOMETRIC:
        return 1.0
    p = order.p
    return math.exp((special.gammaln(1 + p) - 2 * special.gammaln(1 + p / 2)) / p)
