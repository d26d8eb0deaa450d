"""Complex polynomials in the space of degree at most ``n``.

The degree bound is part of a polynomial's identity: ``z**2`` in the
space of degree-2 polynomials and ``z**2`` in the space of degree-4
polynomials have different reverse-conjugates and different zero
structure (the latter has two zeros at infinity).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import minimize_scalar

# coefficients at or below this magnitude count as exact zeros when stripping
ZERO_COEFF = 1e-300
DEFAULT_ROOT_TOL = 1e-9
_EPS = np.finfo(float).eps


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RootFindingError(ArithmeticError):
    """Simultaneous iteration hit its cap before every root converged."""

    def __init__(self, message: str, best: np.ndarray, residual: float):
        super().__init__(message)
        self.best = best
        self.residual = residual


class Polynomial:
    """Immutable coefficient vector ``a_0..a_n`` (ascending) with bound ``n``."""

    __slots__ = ("_coeffs", "_n")

    def __init__(self, coeffs: Iterable[complex], degree_bound: int | None = None):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        n = c.size - 1 if degree_bound is None else int(degree_bound)
        if n < 0:
            raise DomainError("degree bound must be >= 0")
        if c.size > n + 1:
            if np.any(np.abs(c[n + 1:]) > 0):
                raise DomainError(
                    f"{c.size} coefficients do not fit degree bound {n}")
            c = c[: n + 1]
        elif c.size < n + 1:
            c = np.concatenate([c, np.zeros(n + 1 - c.size, dtype=complex)])
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        self._coeffs = c
        self._n = n

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree_bound(self) -> int:
        return self._n

    @property
    def n(self) -> int:
        return self._n

    @classmethod
    def monomial(cls, k: int, n: int, c: complex = 1.0) -> "Polynomial":
        if not 0 <= k <= n:
            raise DomainError(f"monomial degree {k} outside [0, {n}]")
        a = np.zeros(n + 1, dtype=complex)
        a[k] = c
        return cls(a, n)

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(np.zeros(n + 1, dtype=complex), n)

    def exact_degree(self) -> int:
        """Index of the highest coefficient above ZERO_COEFF, or -1 for zero."""
        nz = np.flatnonzero(np.abs(self._coeffs) > ZERO_COEFF)
        return int(nz[-1]) if nz.size else -1

    def is_zero(self) -> bool:
        return self.exact_degree() < 0

    def __call__(self, z):
        return evaluate(self, z)

    def _check_same_space(self, other: "Polynomial") -> None:
        if other._n != self._n:
            raise DomainError(
                f"degree bounds differ: {self._n} vs {other._n}")

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_space(other)
            return Polynomial(self._coeffs + other._coeffs, self._n)
        a = self._coeffs.copy()
        a[0] += complex(other)
        return Polynomial(a, self._n)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_space(other)
            return Polynomial(self._coeffs - other._coeffs, self._n)
        return self + (-complex(other))

    def __neg__(self):
        return Polynomial(-self._coeffs, self._n)

    def __mul__(self, c):
        if isinstance(c, Polynomial):
            return NotImplemented
        return Polynomial(self._coeffs * complex(c), self._n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash((self._n, self._coeffs.tobytes()))

    def __repr__(self):
        return f"Polynomial({self._coeffs.tolist()!r}, degree_bound={self._n})"

    def to_dict(self) -> dict:
        return {"n": self._n,
                "coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Polynomial":
        n = int(d["n"])
        raw = d["coeffs"]
        if len(raw) != n + 1:
            raise DomainError(f"expected {n + 1} coefficients, got {len(raw)}")
        return cls([complex(re, im) for re, im in raw], n)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_dict(json.loads(text))


def evaluate(P: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    return npoly.polyval(z, P.coeffs)


def derivative(P: Polynomial) -> Polynomial:
    n = P.degree_bound
    if n == 0:
        return Polynomial.zero(0)
    k = np.arange(1, n + 1)
    return Polynomial(P.coeffs[1:] * k, n - 1)


def reverse_conjugate(P: Polynomial) -> Polynomial:
    """``z**n * conj(P(1/conj(z)))``: coefficient k becomes conj(a_{n-k})."""
    return Polynomial(np.conj(P.coeffs[::-1]), P.degree_bound)


def scale_compose(P: Polynomial, R: float) -> Polynomial:
    """Coefficients of ``z -> P(R z)``."""
    R = float(R)
    if not math.isfinite(R) or R <= 0:
        raise DomainError(f"scale factor must be finite and positive, got {R}")
    return Polynomial(P.coeffs * R ** np.arange(P.degree_bound + 1), P.degree_bound)


def shift(P: Polynomial, k: int, degree_bound: int | None = None) -> Polynomial:
    """Multiply by ``z**k`` and place the result in the given space."""
    n = P.degree_bound + k if degree_bound is None else degree_bound
    return Polynomial(np.concatenate([np.zeros(k, dtype=complex), P.coeffs]), n)


def from_zeros(zeros: Sequence[complex], leading: complex = 1.0,
               degree_bound: int | None = None) -> Polynomial:
    zeros = list(zeros)
    n = len(zeros) if degree_bound is None else int(degree_bound)
    if len(zeros) > n:
        raise DomainError(f"{len(zeros)} zeros exceed degree bound {n}")
    if complex(leading) == 0:
        raise DomainError("leading coefficient must be nonzero")
    c = npoly.polyfromroots(zeros) if zeros else np.ones(1)
    return Polynomial(np.asarray(c, dtype=complex) * complex(leading), n)


class RootResult(NamedTuple):
    roots: np.ndarray
    residual_bound: float


def _fujiwara_radius(a: np.ndarray) -> float:
    d = a.size - 1
    lead = abs(a[-1])
    terms = [abs(a[d - k] / lead) ** (1.0 / k) for k in range(1, d)]
    terms.append(abs(a[0] / (2 * lead)) ** (1.0 / d))
    return 2.0 * max(terms)


def _inclusion_radii(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Weierstrass inclusion radii ``d |P(z_i)| / |a_d prod_{j!=i}(z_i - z_j)|``."""
    d = z.size
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    denom = np.abs(a[-1]) * np.prod(np.abs(diff), axis=1)
    val = np.abs(npoly.polyval(z, a))
    with np.errstate(divide="ignore", invalid="ignore"):
        r = d * val / denom
    r[val == 0] = 0.0
    r[~np.isfinite(r)] = np.inf
    return r


def _aberth(a: np.ndarray, max_iter: int) -> tuple[np.ndarray, float]:
    d = a.size - 1
    da = npoly.polyder(a)
    absa = np.abs(a)
    rad = _fujiwara_radius(a)
    z = rad * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    active = np.ones(d, dtype=bool)
    for _ in range(max_iter):
        p = npoly.polyval(z, a)
        dp = npoly.polyval(z, da)
        floor = 8 * _EPS * npoly.polyval(np.abs(z), absa)
        active &= np.abs(p) > floor
        if not active.any():
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            w = newton / (1.0 - newton * s)
        bad = ~np.isfinite(w)
        w[bad] = 1e-3 * (1.0 + np.abs(z[bad]))
        w[~active] = 0.0
        z = z - w
        small = np.abs(w) <= 2 * _EPS * np.abs(z)
        active &= ~small
        if not active.any():
            break
    else:
        res = float(np.max(_inclusion_radii(a, z)))
        raise RootFindingError(
            f"simultaneous iteration did not converge in {max_iter} steps",
            z, res)
    return z, float(np.max(_inclusion_radii(a, z)))


def roots(P: Polynomial, max_iter: int = 500) -> RootResult:
    """Roots of the exact-degree polynomial by Aberth-Ehrlich iteration.

    Zeros at the origin (vanishing low coefficients) are returned exactly.
    ``residual_bound`` is the largest Weierstrass inclusion radius, i.e.
    ``deg * |P(zeta)|`` over the product-form derivative at ``zeta``.
    """
    d = P.exact_degree()
    if d < 0:
        raise DomainError("the zero polynomial has no well-defined roots")
    a = P.coeffs[: d + 1].copy()
    a[np.abs(a) <= ZERO_COEFF] = 0
    low = int(np.flatnonzero(a)[0])
    a = a[low:]
    found = [np.zeros(low, dtype=complex)]
    residual = 0.0
    deg = a.size - 1
    if deg == 1:
        found.append(np.array([-a[0] / a[1]]))
    elif deg >= 2:
        z, residual = _aberth(a, max_iter)
        found.append(z)
    r = np.concatenate(found)
    order = np.lexsort((r.imag, r.real))
    return RootResult(r[order], residual)


def _components(z: np.ndarray, radii: np.ndarray) -> list[np.ndarray]:
    """Index groups of roots whose (doubled) inclusion disks overlap, transitively."""
    k = z.size
    label = list(range(k))

    def find(i):
        while label[i] != i:
            label[i] = label[label[i]]
            i = label[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            # a double zero at +-delta gives radii summing to exactly 2 delta
            if abs(z[i] - z[j]) <= 2 * (radii[i] + radii[j]):
                label[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return [np.array(g) for g in groups.values()]


def zero_clusters(P: Polynomial, newton_steps: int = 20) -> list[tuple[complex, int]]:
    """Zeros as (centre, multiplicity) pairs.

    Computed zeros whose inclusion disks overlap form one cluster. A cluster
    of size m is refined by Newton's method on the (m-1)-th derivative,
    where a true m-fold zero is simple, so e.g. (z-2)**3 comes back as
    (2, 3) to rounding instead of three points spread by eps**(1/3).
    """
    rr = roots(P)
    z = rr.roots
    if z.size == 0:
        return []
    d = P.exact_degree()
    a = P.coeffs[: d + 1]
    radii = _inclusion_radii(a, z) if z.size > 1 else np.zeros(1)
    out = []
    for g in _components(z, radii):
        m = g.size
        c = complex(z[g].mean())
        if m > 1 and np.all(z[g] != 0):
            Dm = npoly.polyder(a, m - 1)
            D1 = npoly.polyder(Dm)
            reach = 2 * float(np.max(radii[g])) if np.all(np.isfinite(radii[g])) else math.inf
            w = c
            for _ in range(newton_steps):
                dv = npoly.polyval(w, D1)
                if dv == 0:
                    break
                step = npoly.polyval(w, Dm) / dv
                w -= step
                if abs(step) <= 4 * _EPS * max(abs(w), 1e-300):
                    break
            if np.isfinite(w) and abs(w - c) <= reach:
                c = complex(w)
        out.append((c, m))
    return out


class ZeroClass(str, enum.Enum):
    ALL_IN_CLOSED_DISK = "AllInClosedUnitDisk"
    NONE_IN_OPEN_DISK = "NoneInOpenUnitDisk"
    MIXED = "Mixed"


@dataclass(frozen=True)
class ZeroLocation:
    classification: ZeroClass
    max_modulus: float
    min_modulus: float
    residual_bound: float
    all_in_closed_disk: bool
    none_in_open_disk: bool


def classify_zeros(P: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> ZeroLocation:
    """Locate the zeros of ``P`` relative to the unit circle.

    A polynomial whose exact degree is below its bound has the missing
    zeros at infinity, so it never counts as having all zeros in the disk.
    Multiple zeros are located through ``zero_clusters``, which resolves
    them to rounding rather than to eps**(1/k).
    """
    clusters = zero_clusters(P)
    mods = np.array([abs(c) for c, _ in clusters])
    deficient = P.exact_degree() < P.degree_bound
    max_mod = math.inf if deficient else (float(mods.max()) if mods.size else 0.0)
    min_mod = float(mods.min()) if mods.size else math.inf
    all_in = max_mod <= 1 + tol
    none_in = min_mod >= 1 - tol
    residual = roots(P).residual_bound if P.exact_degree() > 0 else 0.0
    if all_in:
        cls = ZeroClass.ALL_IN_CLOSED_DISK
    elif none_in:
        cls = ZeroClass.NONE_IN_OPEN_DISK
    else:
        cls = ZeroClass.MIXED
    return ZeroLocation(cls, max_mod, min_mod, residual, all_in, none_in)


def sample_on_circle(P: Polynomial, N: int) -> np.ndarray:
    """Values ``P(exp(2 pi i j / N))`` for ``j = 0..N-1`` via one FFT."""
    a = P.coeffs
    if N >= a.size:
        buf = np.zeros(N, dtype=complex)
        buf[: a.size] = a
    else:
        # alias higher powers onto their residues mod N
        buf = np.zeros(N, dtype=complex)
        np.add.at(buf, np.arange(a.size) % N, a)
    return np.fft.ifft(buf) * N


def _circle_extremum(P: Polynomial, tol: float, maximize: bool) -> tuple[float, float]:
    a = P.coeffs
    lip = float(np.sum(np.arange(a.size) * np.abs(a)))
    if lip == 0.0:
        return abs(a[0]), 0.0
    sign = -1.0 if maximize else 1.0
    N = 4096
    while True:
        f = sign * np.abs(sample_on_circle(P, N))
        h = 2 * np.pi / N
        best = f.min()
        if f.max() - best <= 4 * _EPS * max(abs(best), 1.0):
            j = int(np.argmin(f))
            return sign * best, j * h
        is_local = (f <= np.roll(f, 1)) & (f <= np.roll(f, -1))
        cand = np.flatnonzero(is_local & (f - lip * h <= best + tol))
        if cand.size <= max(P.degree_bound, 1) or N >= 1 << 16:
            break
        N *= 2
    cand = cand[np.argsort(f[cand])][:64]
    best_val, best_theta = float(f[cand[0]]), cand[0] * h
    for j in cand:
        theta0 = j * h

        # offset by 1 so golden's relative tolerance is meaningful near theta0
        def g(t, theta0=theta0):
            return sign * abs(npoly.polyval(np.exp(1j * (theta0 + t - 1.0)), a)) ** 2

        fa, fb, fc = g(1.0 - h), g(1.0), g(1.0 + h)
        if not (fb < fa and fb < fc):
            continue
        res = minimize_scalar(g, bracket=(1.0 - h, 1.0, 1.0 + h), method="golden",
                              tol=1e-15)
        t = float(res.x)
        val = sign * abs(npoly.polyval(np.exp(1j * (theta0 + t - 1.0)), a))
        if val < best_val:
            best_val, best_theta = val, theta0 + t - 1.0
    return sign * best_val, best_theta % (2 * np.pi)


def min_modulus_on_circle(P: Polynomial, tol: float = 1e-12) -> float:
    """``min |P(z)|`` over ``|z| = 1``.

    A 4096-node grid (doubled while too many candidate dips survive the
    Lipschitz filter ``|P(e^{it})| >= f_j - h * sum k|a_k|``) locates the
    basins; golden-section search on ``|P|**2`` polishes each one.
    """
    return _circle_extremum(P, tol, maximize=False)[0]


def argmin_modulus_on_circle(P: Polynomial, tol: float = 1e-12) -> tuple[float, float]:
    return _circle_extremum(P, tol, maximize=False)


def max_modulus_on_circle(P: Polynomial, tol: float = 1e-12) -> float:
    return _circle_extremum(P, tol, maximize=True)[0]
