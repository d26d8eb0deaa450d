"""Inequality checks: each evaluates one statement on one instance.

Every check returns a :class:`CheckResult` carrying the two sides and the
signed margin ``rhs - lhs``.  Instances that violate a hypothesis raise
:class:`HypothesisViolation`; they are rejected, never failed.
"""

from __future__ import annotations

import enum
import hashlib
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import bn_operator as bn
from .bn_operator import BnParams
from .norms import DEFAULT_QUADRATURE, GEOMETRIC, SUP, NormOrder, \
    QuadratureSettings, binomial_norm, lp_norm
from .poly_core import DEFAULT_ROOT_TOL, Polynomial, classify_zeros, derivative, \
    min_modulus_on_circle, reverse_conjugate, roots, scale_compose

PASS_REL = 1e-9
PASS_ABS = 1e-12
EQUALITY_REL = 1e-6
SCALAR_TOL = 1e-15

LEMMA_GRID = 512
CLASSICAL_GRID = 256
LEMMA_RINGS = (1.0, 1.25)
CLASSICAL_RINGS = (1.0, 1.5)


class Status(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    EQUALITY = "Equality"
    UNCERTIFIED = "Uncertified"


class HypothesisViolation(ValueError):
    """The instance does not satisfy the statement's hypotheses."""


@dataclass(frozen=True)
class InstanceSpec:
    poly: Polynomial | None = None
    params: BnParams | None = None
    alpha: complex = 0j
    delta: complex = 0j
    R: float = 2.0
    p: NormOrder = field(default_factory=lambda: NormOrder.power(2.0))
    seed: int = 0
    index: int = 0
    family: str = "manual"

    @property
    def n(self) -> int | None:
        if self.poly is not None:
            return self.poly.degree_bound
        return self.params.n if self.params is not None else None

    def poly_digest(self) -> str | None:
        if self.poly is None:
            return None
        return hashlib.sha256(self.poly.to_json().encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        a, d = complex(self.alpha), complex(self.delta)
        return {
            "n": self.n,
            "lambda": self.params.to_dict()["lambda"] if self.params else None,
            "alpha": [a.real, a.imag],
            "delta": [d.real, d.imag],
            "R": self.R,
            "p": self.p.to_json_value(),
            "poly_digest": self.poly_digest(),
        }


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    instance: InstanceSpec
    lhs: float
    rhs: float
    margin: float
    status: Status
    quadrature_nodes: int = 0
    details: dict = field(default_factory=dict, compare=False)

    @property
    def relative_margin(self) -> float:
        return self.margin / max(abs(self.rhs), 1e-300)

    def to_record(self) -> dict:
        inst = self.instance
        return {
            "check": self.check_name,
            "seed": inst.seed,
            "index": inst.index,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "status": self.status.value,
            "nodes": self.quadrature_nodes,
            "instance": inst.to_dict(),
        }


def classify_status(lhs: float, rhs: float, certified: bool = True) -> Status:
    # a margin below the pass threshold is a failure even when it would
    # also sit inside the (looser) equality band
    margin = rhs - lhs
    if not certified:
        return Status.UNCERTIFIED
    if not margin >= -(PASS_REL * abs(rhs) + PASS_ABS):
        return Status.FAIL
    if abs(margin) <= EQUALITY_REL * max(rhs, 1e-30):
        return Status.EQUALITY
    return Status.PASS


def _result(name, inst, lhs, rhs, certified=True, nodes=0, **details) -> CheckResult:
    lhs, rhs = float(lhs), float(rhs)
    return CheckResult(name, inst, lhs, rhs, rhs - lhs,
                       classify_status(lhs, rhs, certified), int(nodes), details)


# -- hypotheses ---------------------------------------------------------------

def _need_poly(inst: InstanceSpec) -> Polynomial:
    if inst.poly is None:
        raise HypothesisViolation("instance carries no polynomial")
    if inst.poly.is_zero():
        raise HypothesisViolation("zero polynomial")
    return inst.poly


def _need_params(inst: InstanceSpec, P: Polynomial) -> BnParams:
    if inst.params is None:
        raise HypothesisViolation("instance carries no operator parameters")
    if inst.params.n != P.degree_bound:
        raise HypothesisViolation("operator degree differs from polynomial space")
    rep = bn.is_admissible(inst.params)
    if not rep.admissible:
        raise HypothesisViolation(f"parameters not admissible (slack {rep.worst_slack:g})")
    return inst.params


def _need_nonvanishing(P: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> None:
    if not classify_zeros(P, tol).none_in_open_disk:
        raise HypothesisViolation("polynomial vanishes in the open unit disk")


def _need_in_disk(P: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> None:
    if not classify_zeros(P, tol).all_in_closed_disk:
        raise HypothesisViolation("polynomial has zeros outside the closed unit disk")


def _need_disk_scalar(name: str, v: complex) -> None:
    if abs(complex(v)) > 1 + SCALAR_TOL:
        raise HypothesisViolation(f"|{name}| > 1")


def _need_R(R: float, strict: bool) -> None:
    if not math.isfinite(R) or (R <= 1 if strict else R < 1):
        raise HypothesisViolation(f"R={R} outside the {'R > 1' if strict else 'R >= 1'} range")


def _need_finite_p(order: NormOrder) -> None:
    if order.kind == SUP:
        raise HypothesisViolation("statement covers finite p only")


# -- main Lp inequality family ------------------------------------------------

def _theorem1_core(name: str, inst: InstanceSpec, alpha: complex, delta: complex,
                   q: QuadratureSettings, rhs_kind: str = "binomial") -> CheckResult:
    P = _need_poly(inst)
    params = _need_params(inst, P)
    _need_nonvanishing(P)
    _need_disk_scalar("alpha", alpha)
    _need_disk_scalar("delta", delta)
    _need_R(inst.R, strict=True)
    _need_finite_p(inst.p)
    n, R, p = P.degree_bound, float(inst.R), inst.p
    lam_n, lam0 = bn.lambda_cap(params), params.lambda0
    m = min_modulus_on_circle(P)
    big = abs(R ** n - alpha) * abs(lam_n)
    small = abs(1 - alpha) * abs(lam0)
    scalar = (big - small) * m / 2
    target = bn.scaled_diff(params, P, R, alpha)
    if delta != 0:
        target = target + delta * scalar
    lhs = lp_norm(target, p, q)
    pn = lp_norm(P, p, q)
    if rhs_kind == "binomial":
        factor = binomial_norm((R ** n - alpha) * lam_n, (1 - alpha) * lam0, p, q)
    else:
        factor = R ** n * abs(lam_n) + abs(lam0)
    rhs = factor / binomial_norm(1, 1, p, q) * pn.value
    return _result(name, inst, lhs.value, rhs, lhs.certified and pn.certified,
                   max(lhs.nodes, pn.nodes), m=m, delta_scalar=scalar,
                   negative_delta_scalar=bool(scalar < 0 and delta != 0))


def check_theorem1(inst: InstanceSpec, q: QuadratureSettings = DEFAULT_QUADRATURE
                   ) -> CheckResult:
    """Norm of B[P(Rz)] - alpha B[P] + delta*C against the two-term bound."""
    return _theorem1_core("theorem1", inst, complex(inst.alpha), complex(inst.delta), q)


class Corollary(str, enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    CC = "CC"
    C4SUP = "C4sup"
    THEOREM_A = "TheoremA"
    THEOREM_B = "TheoremB"


def check_corollary(variant: Corollary | str, inst: InstanceSpec,
                    q: QuadratureSettings = DEFAULT_QUADRATURE) -> CheckResult:
    v = Corollary(variant)
    if v is Corollary.C1:
        return _theorem1_core("C1", inst, complex(inst.alpha), 0j, q)
    if v is Corollary.C2:
        return _theorem1_core("C2", inst, 0j, 0j, q)
    if v is Corollary.C3:
        return _theorem1_core("C3", inst, 0j, 0j, q, rhs_kind="triangle")
    if v is Corollary.THEOREM_B:
        if inst.p.kind != "power" or inst.p.p < 1:
            raise HypothesisViolation("Theorem B is stated for p >= 1")
        return _theorem1_core("TheoremB", inst, 0j, 0j, q, rhs_kind="triangle")
    if v is Corollary.CC:
        return _theorem1_core("CC", inst, 0j, complex(inst.delta), q)
    if v is Corollary.C4SUP:
        return _corollary4_sup(inst)
    return _theorem_a(inst, q)


def _corollary4_sup(inst: InstanceSpec) -> CheckResult:
    P = _need_poly(inst)
    params = _need_params(inst, P)
    _need_nonvanishing(P)
    alpha = complex(inst.alpha)
    _need_disk_scalar("alpha", alpha)
    _need_R(inst.R, strict=True)
    n, R = P.degree_bound, float(inst.R)
    big = abs(R ** n - alpha) * abs(bn.lambda_cap(params))
    small = abs((1 - alpha) * params.lambda0)
    m = min_modulus_on_circle(P)
    sup = NormOrder.sup()
    lhs = lp_norm(bn.scaled_diff(params, P, R, alpha), sup).value
    rhs = (big + small) / 2 * lp_norm(P, sup).value - (big - small) / 2 * m
    return _result("C4sup", inst, lhs, rhs, nodes=4096, m=m)


def _theorem_a(inst: InstanceSpec, q: QuadratureSettings) -> CheckResult:
    P = _need_poly(inst)
    params = _need_params(inst, P)
    _need_R(inst.R, strict=False)
    n, R, p = P.degree_bound, float(inst.R), inst.p
    # stated for p >= 1; smaller p is evaluated but labelled as extrapolated
    stated = p.kind == SUP or (p.kind == "power" and p.p >= 1)
    name = "TheoremA" if stated else "TheoremA[extrapolated]"
    lhs = lp_norm(bn.apply(params, scale_compose(P, R)), p, q)
    pn = lp_norm(P, p, q)
    rhs = R ** n * abs(bn.lambda_cap(params)) * pn.value
    return _result(name, inst, lhs.value, rhs, lhs.certified and pn.certified,
                   max(lhs.nodes, pn.nodes))


# -- classical inequalities ---------------------------------------------------

CLASSICAL = tuple(f"eq{i}" for i in range(1, 13))


def _ring(radius: float, count: int, phase: float = 0.0) -> np.ndarray:
    return radius * np.exp(1j * (phase + 2 * np.pi * np.arange(count) / count))


def _pointwise(name, inst, lhs: np.ndarray, rhs: np.ndarray, **details) -> CheckResult:
    margins = rhs - lhs
    j = int(np.argmin(margins))
    return _result(name, inst, lhs[j], rhs[j], worst_node=j, nodes=lhs.size, **details)


def check_classical(name: str, inst: InstanceSpec,
                    q: QuadratureSettings = DEFAULT_QUADRATURE,
                    grid_phase: float = 0.0) -> CheckResult:
    """Bernstein-type predecessors and Rahman's pointwise operator bounds.

    eq9-eq12 are pointwise; at |z| = rho > 1 they are evaluated in their
    |z| >= 1 form (eq9/eq10 with the |z|^n growth factor, eq11/eq12 by
    substituting R -> R rho, since B[P(Rz)] at rho u equals B[P](R rho u)).
    """
    if name not in CLASSICAL:
        raise ValueError(f"unknown classical inequality {name!r}")
    P = _need_poly(inst)
    n = P.degree_bound
    k = int(name[2:])
    sup = NormOrder.sup()
    if k in (5, 6, 7, 8, 10, 12):
        _need_nonvanishing(P)
    if k in (1, 5):
        lhs = lp_norm(derivative(P), sup).value
        rhs = (n if k == 1 else n / 2) * lp_norm(P, sup).value
        return _result(name, inst, lhs, rhs, nodes=4096)
    if k in (2, 6):
        _need_R(inst.R, strict=(k == 6))
        R = float(inst.R)
        lhs = lp_norm(scale_compose(P, R), sup).value
        fac = R ** n if k == 2 else (R ** n + 1) / 2
        return _result(name, inst, lhs, fac * lp_norm(P, sup).value, nodes=4096)
    if k in (3, 7):
        _need_finite_p(inst.p)
        lhs = lp_norm(derivative(P), inst.p, q)
        pn = lp_norm(P, inst.p, q)
        den = 1.0 if k == 3 else binomial_norm(1, 1, inst.p, q)
        return _result(name, inst, lhs.value, n * pn.value / den,
                       lhs.certified and pn.certified, max(lhs.nodes, pn.nodes))
    if k in (4, 8):
        _need_finite_p(inst.p)
        _need_R(inst.R, strict=True)
        R = float(inst.R)
        lhs = lp_norm(scale_compose(P, R), inst.p, q)
        pn = lp_norm(P, inst.p, q)
        if k == 4:
            fac = R ** n
        else:
            fac = binomial_norm(R ** n, 1, inst.p, q) / binomial_norm(1, 1, inst.p, q)
        return _result(name, inst, lhs.value, fac * pn.value,
                       lhs.certified and pn.certified, max(lhs.nodes, pn.nodes))
    # eq9..eq12: pointwise operator bounds
    params = _need_params(inst, P)
    R = 1.0
    if k in (11, 12):
        _need_R(inst.R, strict=False)
        R = float(inst.R)
    lam_n, lam0 = abs(bn.lambda_cap(params)), abs(params.lambda0)
    bp = bn.apply(params, P).coeffs
    psup = lp_norm(P, sup).value
    lhs, rhs = [], []
    for rho in CLASSICAL_RINGS:
        z = _ring(rho, CLASSICAL_GRID, grid_phase)
        lhs.append(np.abs(npoly.polyval(R * z, bp)))
        grow = (R * rho) ** n
        if k in (9, 11):
            rhs.append(np.full(z.size, lam_n * grow * psup))
        else:
            rhs.append(np.full(z.size, 0.5 * (lam_n * grow + lam0) * psup))
    return _pointwise(name, inst, np.concatenate(lhs), np.concatenate(rhs))


# -- lemmas -------------------------------------------------------------------

LEMMAS = ("L1", "L2", "L2prime", "L3", "L3prime", "ABC")


def check_lemma(name: str, inst: InstanceSpec | None = None, *,
                grid_phase: float = 0.0, A: float | None = None,
                B: float | None = None, C: float | None = None,
                gamma_nodes: int = LEMMA_GRID) -> CheckResult:
    if name == "ABC":
        return _lemma_abc(inst, A, B, C, gamma_nodes)
    if name not in LEMMAS:
        raise ValueError(f"unknown lemma {name!r}")
    P = _need_poly(inst)
    n = P.degree_bound
    if name == "L1":
        params = _need_params(inst, P)
        _need_in_disk(P)
        BP = bn.apply(params, P)
        if BP.is_zero():
            raise HypothesisViolation("B[P] vanishes identically")
        mods = np.abs(roots(BP).roots)
        lhs = float(mods.max()) if mods.size else 0.0
        return _result("L1", inst, lhs, 1.0, root_count=int(mods.size))
    if name == "L2":
        _need_in_disk(P)
        _need_R(inst.R, strict=True)
        R = float(inst.R)
        z = _ring(1.0, LEMMA_GRID, grid_phase)
        lhs = ((R + 1) / 2) ** n * np.abs(P(z))
        rhs = np.abs(P(R * z))
        return _pointwise("L2", inst, lhs, rhs)
    params = _need_params(inst, P)
    alpha = complex(inst.alpha)
    _need_disk_scalar("alpha", alpha)
    _need_R(inst.R, strict=True)
    R = float(inst.R)
    lam_n, lam0 = abs(bn.lambda_cap(params)), abs(params.lambda0)
    X = bn.scaled_diff(params, P, R, alpha)
    lhs, rhs = [], []
    if name == "L2prime":
        _need_in_disk(P)
        m = min_modulus_on_circle(P)
        for rho in LEMMA_RINGS:
            z = _ring(rho, LEMMA_GRID, grid_phase)
            lhs.append(np.full(z.size, abs(R ** n - alpha) * lam_n * rho ** n * m))
            rhs.append(np.abs(X(z)))
        # |z| -> infinity: compare the z^n coefficients
        lhs.append(np.array([abs(R ** n - alpha) * lam_n * m]))
        rhs.append(np.array([abs(X.coeffs[n])]))
        return _pointwise(name, inst, np.concatenate(lhs), np.concatenate(rhs), m=m)
    _need_nonvanishing(P)
    Y = bn.scaled_diff(params, reverse_conjugate(P), R, alpha)
    m = min_modulus_on_circle(P) if name == "L3prime" else 0.0
    cut = (abs(R ** n - alpha) * lam_n - abs(1 - alpha) * lam0) * m
    for rho in LEMMA_RINGS:
        z = _ring(rho, LEMMA_GRID, grid_phase)
        lhs.append(np.abs(X(z)))
        rhs.append(np.abs(Y(z)) - cut)
    # the constant cut is negligible against |z|^n at infinity
    lhs.append(np.array([abs(X.coeffs[n])]))
    rhs.append(np.array([abs(Y.coeffs[n])]))
    return _pointwise(name, inst, np.concatenate(lhs), np.concatenate(rhs), m=m)


def _lemma_abc(inst, A, B, C, gamma_nodes) -> CheckResult:
    if A is None or B is None or C is None:
        raise HypothesisViolation("ABC needs A, B, C")
    if min(A, B, C) < 0 or B + C > A * (1 + 1e-15):
        raise HypothesisViolation("ABC needs non-negative A, B, C with B + C <= A")
    g = np.exp(2j * np.pi * np.arange(gamma_nodes) / gamma_nodes)
    lhs = np.abs((A - C) * g + (B + C))
    rhs = np.abs(A * g + B)
    return _pointwise("ABC", inst if inst is not None else InstanceSpec(), lhs, rhs,
                      A=A, B=B, C=C)


# -- rotated integral inequality ----------------------------------------------

def lemma5_sides(inst: InstanceSpec, gamma: float,
                 q: QuadratureSettings = DEFAULT_QUADRATURE):
    """Both sides at one rotation gamma, normalized measure, p-th powers."""
    P, params = inst.poly, inst.params
    n, R, alpha, p = P.degree_bound, float(inst.R), complex(inst.alpha), inst.p.p
    X = bn.scaled_diff(params, P, R, alpha)
    Y = bn.star_diff(params, P, R, alpha)
    g = complex(math.cos(gamma), math.sin(gamma))
    lhs = lp_norm(g * X + Y, inst.p, q)
    pn = lp_norm(P, inst.p, q)
    w = abs((R ** n - alpha) * bn.lambda_cap(params) * g
            + (1 - alpha.conjugate()) * params.lambda0.conjugate())
    return (lhs.value ** p, w ** p * pn.value ** p,
            lhs.certified and pn.certified, max(lhs.nodes, pn.nodes))


def lemma5_parseval(inst: InstanceSpec, gamma: float) -> float:
    """Left side at p = 2 straight from coefficients (sum of |c_k|^2)."""
    P, params = inst.poly, inst.params
    X = bn.scaled_diff(params, P, float(inst.R), complex(inst.alpha))
    Y = bn.star_diff(params, P, float(inst.R), complex(inst.alpha))
    c = complex(math.cos(gamma), math.sin(gamma)) * X.coeffs + Y.coeffs
    return float(np.sum(np.abs(c) ** 2))


def check_lemma5(inst: InstanceSpec, gamma_nodes: int = 64,
                 q: QuadratureSettings = DEFAULT_QUADRATURE) -> CheckResult:
    P = _need_poly(inst)
    _need_params(inst, P)
    _need_nonvanishing(P)
    _need_disk_scalar("alpha", inst.alpha)
    _need_R(inst.R, strict=True)
    if inst.p.kind != "power":
        raise HypothesisViolation("the integral bound is stated for p > 0")
    best = None
    certified, nodes = True, 0
    for j in range(gamma_nodes):
        lhs, rhs, ok, nn = lemma5_sides(inst, 2 * np.pi * j / gamma_nodes, q)
        certified &= ok
        nodes = max(nodes, nn)
        if best is None or rhs - lhs < best[1] - best[0]:
            best = (lhs, rhs, j)
    return _result("lemma5", inst, best[0], best[1], certified, nodes, worst_gamma=best[2])


# -- counterexample -----------------------------------------------------------

@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    params: BnParams
    R: float
    composite_of_star: Polynomial
    star_of_composite: Polynomial
    modulus_composite_of_star: float
    modulus_star_of_composite: float
    expected_composite_of_star: float
    expected_star_of_composite: float
    max_discrepancy: float
    holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "params": self.params.to_dict(),
            "R": self.R,
            "composite_of_star": self.composite_of_star.to_dict(),
            "star_of_composite": self.star_of_composite.to_dict(),
            "modulus_composite_of_star": self.modulus_composite_of_star,
            "modulus_star_of_composite": self.modulus_star_of_composite,
            "expected_composite_of_star": self.expected_composite_of_star,
            "expected_star_of_composite": self.expected_star_of_composite,
            "max_discrepancy": self.max_discrepancy,
            "holds": self.holds,
        }


def star_composite_pair(params: BnParams, P: Polynomial, R: float
                        ) -> tuple[Polynomial, Polynomial]:
    """(B[P*(R z)], B[(P*(R z))*]); the two differ in modulus on |z| = 1."""
    Ps = scale_compose(reverse_conjugate(P), R)
    return bn.apply(params, Ps), bn.apply(params, reverse_conjugate(Ps))


def reproduce_counterexample(n: int, params: BnParams, R: float,
                             nodes: int = 1024, tol: float = 1e-10
                             ) -> CounterexampleReport:
    if params.n != n:
        params = params.with_n(n)
    P = Polynomial.monomial(n, n)
    a, b = star_composite_pair(params, P, R)
    z = _ring(1.0, nodes)
    ma, mb = np.abs(a(z)), np.abs(b(z))
    exp_a, exp_b = abs(params.lambda0), abs(bn.lambda_cap(params))
    holds = bool(np.all(np.abs(ma - exp_a) <= tol * max(1.0, exp_a))
                 and np.all(np.abs(mb - exp_b) <= tol * max(1.0, exp_b)))
    return CounterexampleReport(
        n, params, float(R), a, b, float(ma.max()), float(mb.max()), exp_a, exp_b,
        float(np.max(np.abs(ma - mb))), holds)


def counterexample_result(n: int, params: BnParams, R: float) -> CheckResult:
    rep = reproduce_counterexample(n, params, R)
    inst = InstanceSpec(Polynomial.monomial(n, n), rep.params, R=float(R),
                        family="counterexample")
    status = Status.PASS if rep.holds else Status.FAIL
    lhs, rhs = rep.modulus_composite_of_star, rep.modulus_star_of_composite
    return CheckResult("counterexample", inst, lhs, rhs, rhs - lhs, status, 1024,
                       {"max_discrepancy": rep.max_discrepancy})


# -- sharpness ------------------------------------------------------------------

@dataclass(frozen=True)
class SharpnessReport:
    max_gap: float
    by_p: dict
    worst: tuple


def sharpness_scan(params: BnParams, R: float, p_list, phase_grid: int = 16,
                   q: QuadratureSettings = DEFAULT_QUADRATURE) -> SharpnessReport:
    """Max relative equality gap of the main inequality over a z^n + b, |a| = |b| = 1."""
    from .testgen import extremal

    n = params.n
    by_p = {}
    worst = (0.0, None, None, None)
    phases = np.exp(2j * np.pi * np.arange(phase_grid) / phase_grid)
    for pv in p_list:
        order = NormOrder.parse(pv)
        gap_p = 0.0
        for a in phases:
            for b in phases:
                inst = InstanceSpec(extremal(a, b, n), params, 0j, 0j, float(R), order,
                                    family="extremal")
                res = check_theorem1(inst, q)
                gap = abs(res.margin) / max(res.rhs, 1e-300)
                gap_p = max(gap_p, gap)
                if gap > worst[0]:
                    worst = (gap, order.to_json_value(), complex(a), complex(b))
        by_p[order.to_json_value()] = gap_p
    return SharpnessReport(max(by_p.values()) if by_p else 0.0, by_p, worst)


# -- registry -------------------------------------------------------------------

def _corollary_runner(v: str) -> Callable:
    return lambda inst, q: check_corollary(v, inst, q)


def _classical_runner(name: str) -> Callable:
    return lambda inst, q: check_classical(name, inst, q)


def _lemma_runner(name: str) -> Callable:
    return lambda inst, q: check_lemma(name, inst)


CHECKS: dict[str, tuple[str, Callable]] = {"theorem1": ("nonvanishing", check_theorem1)}
for _v in ("C1", "C2", "C3", "CC", "C4sup", "TheoremB"):
    CHECKS[_v] = ("nonvanishing", _corollary_runner(_v))
CHECKS["TheoremA"] = ("arbitrary", _corollary_runner("TheoremA"))
for _k in range(1, 13):
    CHECKS[f"eq{_k}"] = ("nonvanishing" if _k in (5, 6, 7, 8, 10, 12) else "arbitrary",
                         _classical_runner(f"eq{_k}"))
for _l, _fam in (("L1", "in_disk"), ("L2", "in_disk"), ("L2prime", "in_disk"),
                 ("L3", "nonvanishing"), ("L3prime", "nonvanishing")):
    CHECKS[_l] = (_fam, _lemma_runner(_l))
CHECKS["lemma5"] = ("nonvanishing", lambda inst, q: check_lemma5(inst, 64, q))
# ABC and counterexample take their own arguments; the suite special-cases them
CHECKS["ABC"] = ("scalars", None)
CHECKS["counterexample"] = ("fixed", None)


def with_poly(inst: InstanceSpec, P: Polynomial) -> InstanceSpec:
    return replace(inst, poly=P)
