"""B_n-operators: admissible parameter triples and their diagonal action.

B[P] = l0 P + l1 (n z / 2) P' + l2 (n z / 2)**2 P'' / 2 acts on the
monomial z**k by the multiplier

    t_k = l0 + (l1 n / 2) k + (l2 n**2 / 8) k (k - 1).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .poly_core import DomainError, Polynomial, derivative, reverse_conjugate, \
    scale_compose, shift


@dataclass(frozen=True)
class BnParams:
    lambda0: complex
    lambda1: complex
    lambda2: complex
    n: int

    def __post_init__(self):
        for name in ("lambda0", "lambda1", "lambda2"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if self.lambda0 == 0 and self.lambda1 == 0 and self.lambda2 == 0:
            raise DomainError("all three lambdas vanish; B would be identically zero")

    @property
    def lambdas(self) -> tuple[complex, complex, complex]:
        return (self.lambda0, self.lambda1, self.lambda2)

    def with_n(self, n: int) -> "BnParams":
        return BnParams(self.lambda0, self.lambda1, self.lambda2, n)

    def to_dict(self) -> dict:
        return {"n": self.n,
                "lambda": [[v.real, v.imag] for v in self.lambdas]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "BnParams":
        lam = d["lambda"]
        if len(lam) != 3:
            raise DomainError("expected three lambda entries")
        l0, l1, l2 = (complex(re, im) for re, im in lam)
        return cls(l0, l1, l2, int(d["n"]))

    @classmethod
    def from_json(cls, text: str) -> "BnParams":
        return cls.from_dict(json.loads(text))


def _weights(n: int, k):
    # n k / 2 and n^2 k (k-1) / 8 are exact in binary floating point for
    # the degrees used here, so lambda_cap and multiplier(n) agree bitwise
    k = np.asarray(k, dtype=float)
    return n * k / 2.0, n * n * k * (k - 1.0) / 8.0


def multiplier(params: BnParams, k: int) -> complex:
    """Eigenvalue of B on ``z**k``."""
    if not 0 <= k <= params.n:
        raise DomainError(f"k={k} outside [0, {params.n}]")
    w1, w2 = _weights(params.n, k)
    return params.lambda0 + params.lambda1 * float(w1) + params.lambda2 * float(w2)


def multipliers(params: BnParams) -> np.ndarray:
    w1, w2 = _weights(params.n, np.arange(params.n + 1))
    return params.lambda0 + params.lambda1 * w1 + params.lambda2 * w2


def lambda_cap(params: BnParams) -> complex:
    """Top multiplier l0 + l1 n^2/2 + l2 n^3 (n-1)/8."""
    n = float(params.n)
    return (params.lambda0 + params.lambda1 * (n * n / 2.0)
            + params.lambda2 * (n * n * n * (n - 1.0) / 8.0))


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    u_roots: tuple[complex, ...]
    worst_slack: float
    tol: float = field(default=0.0)


def u_roots(params: BnParams) -> tuple[complex, ...]:
    """Zeros of U(z) = l0 + l1 C(n,1) z + l2 C(n,2) z^2 in closed form."""
    n = params.n
    c0 = params.lambda0
    c1 = params.lambda1 * n
    c2 = params.lambda2 * (n * (n - 1) / 2)
    if c2 != 0:
        disc = cmath.sqrt(c1 * c1 - 4 * c2 * c0)
        # pick the sign that avoids cancellation
        q = -(c1 + disc) / 2 if abs(c1 + disc) >= abs(c1 - disc) else -(c1 - disc) / 2
        if q == 0:
            return (0j, 0j)
        return (q / c2, c0 / q)
    if c1 != 0:
        return (-c0 / c1,)
    return ()


def is_admissible(params: BnParams, tol: float | None = None) -> AdmissibilityReport:
    """Check that every zero of U satisfies ``|z| <= |z - n/2|``."""
    if tol is None:
        tol = 1e-12 * (1 + params.n)
    rts = u_roots(params)
    half = params.n / 2
    slacks = [abs(z - half) - abs(z) for z in rts]
    worst = min(slacks) if slacks else math.inf
    return AdmissibilityReport(worst >= -tol, rts, worst, tol)


def _check_space(params: BnParams, P: Polynomial) -> None:
    if P.degree_bound != params.n:
        raise DomainError(
            f"operator for n={params.n} applied to a polynomial of degree bound "
            f"{P.degree_bound}")


def apply(params: BnParams, P: Polynomial) -> Polynomial:
    _check_space(params, P)
    return Polynomial(multipliers(params) * P.coeffs, params.n)


def apply_via_derivatives(params: BnParams, P: Polynomial) -> Polynomial:
    """Same operator, built from P, z P' and z^2 P'' instead of multipliers."""
    _check_space(params, P)
    n = params.n
    d1 = derivative(P)
    d2 = derivative(d1)
    zd1 = shift(d1, 1, n)
    zzd2 = shift(d2, 2, n) if n >= 2 else Polynomial.zero(n)
    return (params.lambda0 * P
            + (params.lambda1 * (n / 2)) * zd1
            + (params.lambda2 * (n * n / 8)) * zzd2)


def scaled_diff(params: BnParams, P: Polynomial, R: float, alpha: complex) -> Polynomial:
    """B[P(R z)] - alpha B[P](z); coefficient k is t_k a_k (R^k - alpha)."""
    _check_space(params, P)
    if not R > 0:
        raise DomainError("R must be positive")
    k = np.arange(params.n + 1)
    return Polynomial(multipliers(params) * P.coeffs * (float(R) ** k - complex(alpha)),
                      params.n)


def star_diff(params: BnParams, P: Polynomial, R: float, alpha: complex,
              method: str = "coefficients") -> Polynomial:
    """B[P*(R z)]* - conj(alpha) B[P*]*, the reflected companion of scaled_diff.

    ``method`` selects one of three independent constructions:
    ``coefficients`` (conj(t_{n-k} (R^{n-k} - alpha)) a_k), ``reflection``
    (star, scaled_diff, star) or ``closed_form`` (expansion in P(z/R),
    P'(z/R), P''(z/R)).
    """
    _check_space(params, P)
    if not R > 0:
        raise DomainError("R must be positive")
    alpha = complex(alpha)
    n = params.n
    if method == "coefficients":
        t = multipliers(params)[::-1]
        rk = float(R) ** np.arange(n, -1, -1)
        return Polynomial(np.conj(t * (rk - alpha)) * P.coeffs, n)
    if method == "reflection":
        return reverse_conjugate(scaled_diff(params, reverse_conjugate(P), R, alpha))
    if method == "closed_form":
        return _star_diff_closed_form(params, P, float(R), alpha)
    raise ValueError(f"unknown method {method!r}")


def _star_diff_closed_form(params: BnParams, P: Polynomial, R: float,
                           alpha: complex) -> Polynomial:
    n = params.n
    l0, l1, l2 = (v.conjugate() for v in params.lambdas)
    ac = alpha.conjugate()
    c0 = l0 + l1 * (n * n / 2) + l2 * (n ** 3 * (n - 1) / 8)
    c1 = l1 * (n / 2) + l2 * (n * n * (n - 1) / 4)
    c2 = l2 * (n * n / 8)
    Pr = scale_compose(P, 1.0 / R)
    d1, d1r = derivative(P), derivative(Pr)
    # R^(n-j) z^j P^(j)(z/R) == R^n z^j (d/dz)^j [P(z/R)]
    term0 = (R ** n) * Pr - ac * P
    term1 = (R ** n) * shift(d1r, 1, n) - ac * shift(d1, 1, n)
    if n >= 2:
        d2, d2r = derivative(d1), derivative(d1r)
        term2 = (R ** n) * shift(d2r, 2, n) - ac * shift(d2, 2, n)
    else:
        term2 = Polynomial.zero(n)
    return c0 * term0 - c1 * term1 + c2 * term2
