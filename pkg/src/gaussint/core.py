"""Shared domain types and the special functions every identity evaluator leans on.

Everything here is pure: values are immutable after construction and all
operations are plain functions of their inputs, so concurrent use is safe.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

__all__ = [
    "QuantumParam",
    "TruncationControl",
    "RealSpdMatrix",
    "ComplexSymMatrix",
    "SymplecticSpace",
    "gamma",
    "reflection_check",
    "erf",
    "agm",
    "omega_relations",
]

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class QuantumParam:
    """Strictly positive dimensionless scale parameter; k = 1/hbar."""

    hbar: float

    def __post_init__(self) -> None:
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise ValueError(f"hbar must be finite and > 0, got {self.hbar}")

    @property
    def k(self) -> float:
        return 1.0 / self.hbar


@dataclass(frozen=True)
class TruncationControl:
    """Stopping rule for series summation."""

    max_terms: int = 400
    tail_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be > 0")


class RealSpdMatrix:
    """Real symmetric positive definite matrix, validated at construction.

    Positive definiteness is checked by a Cholesky factorization; the stored
    entries are exactly symmetric.
    """

    def __init__(self, entries) -> None:
        arr = np.asarray(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("entries must be a square matrix")
        if not np.allclose(arr, arr.T, rtol=0.0, atol=1e-12 * (1 + np.abs(arr).max())):
            raise ValueError("matrix is not symmetric")
        arr = (arr + arr.T) / 2.0
        try:
            self._chol = np.linalg.cholesky(arr)
        except np.linalg.LinAlgError as exc:
            raise ValueError("matrix is not positive definite") from exc
        arr.setflags(write=False)
        self.entries = arr
        self.n = arr.shape[0]

    def det(self) -> float:
        return float(np.prod(np.diag(self._chol)) ** 2)

    def inverse(self, cond_limit: float = 1e12) -> np.ndarray:
        cond = np.linalg.cond(self.entries)
        if cond > cond_limit:
            raise ValueError(f"matrix too ill-conditioned to invert (cond={cond:.3e})")
        return np.linalg.inv(self.entries)

    def __repr__(self) -> str:
        return f"RealSpdMatrix(n={self.n})"


class ComplexSymMatrix:
    """Nonsingular complex symmetric matrix admissible as a Gaussian quadratic form.

    Admissible means: the real part is positive semidefinite, or the matrix is
    purely imaginary with nonsingular imaginary part.
    """

    def __init__(self, entries) -> None:
        arr = np.asarray(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("entries must be a square matrix")
        scale = 1 + np.abs(arr).max()
        if not np.allclose(arr, arr.T, rtol=0.0, atol=1e-12 * scale):
            raise ValueError("matrix is not symmetric")
        arr = (arr + arr.T) / 2.0
        if abs(np.linalg.det(arr)) < 1e-13 * scale ** arr.shape[0]:
            raise ValueError("matrix is singular")
        self.is_purely_imaginary = bool(np.all(arr.real == 0.0))
        if self.is_purely_imaginary:
            imag = arr.imag
            if abs(np.linalg.det(imag)) < 1e-13 * scale ** arr.shape[0]:
                raise ValueError("imaginary part is singular")
        else:
            re_eigs = np.linalg.eigvalsh(arr.real)
            if re_eigs.min() < -1e-10 * scale:
                raise ValueError("real part is not positive semidefinite")
        arr.setflags(write=False)
        self.entries = arr
        self.n = arr.shape[0]

    def __repr__(self) -> str:
        return f"ComplexSymMatrix(n={self.n})"


def _standard_j(d: int) -> np.ndarray:
    n = d // 2
    j = np.zeros((d, d))
    j[:n, n:] = -np.eye(n)
    j[n:, :n] = np.eye(n)
    return j


@dataclass(frozen=True, eq=False)
class SymplecticSpace:
    """R^d with a complex structure J, the dot-product metric g and omega = g(J., .)."""

    d: int
    J: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.d <= 0 or self.d % 2 != 0:
            raise ValueError("dimension must be a positive even integer")
        j = self.J if self.J is not None else _standard_j(self.d)
        j = np.asarray(j, dtype=float)
        if j.shape != (self.d, self.d):
            raise ValueError("J has wrong shape")
        if not np.allclose(j @ j, -np.eye(self.d), atol=1e-12):
            raise ValueError("J^2 != -Id")
        if not np.allclose(j.T, -j, atol=1e-12):
            raise ValueError("J is not antisymmetric")
        j.setflags(write=False)
        object.__setattr__(self, "J", j)

    def g(self, v, w) -> float:
        v, w = self._check(v, w)
        return float(v @ w)

    def omega(self, v, w) -> float:
        v, w = self._check(v, w)
        return float((self.J @ v) @ w)

    def hermitian(self, v, w) -> complex:
        """The positive definite product h = g - i*omega."""
        return self.g(v, w) - 1j * self.omega(v, w)

    def apply_j(self, v) -> np.ndarray:
        return self.J @ np.asarray(v, dtype=float)

    def _check(self, v, w):
        v = np.asarray(v, dtype=float)
        w = np.asarray(w, dtype=float)
        if v.shape != (self.d,) or w.shape != (self.d,):
            raise ValueError(f"vectors must have dimension {self.d}")
        return v, w


# Fixed-coefficient rational approximation of Gamma (Lanczos, g=7, 9 terms).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(s):
    """Gamma function for Re s > 0.

    Returns a float for real input, complex otherwise. Arguments with
    Re s <= 0 are rejected; callers wanting the left half plane go through the
    reflection formula themselves.
    """
    z = complex(s)
    if z.real <= 0.0:
        raise ValueError(f"gamma requires Re s > 0, got {s}")
    w = z - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (w + i)
    t = w + _LANCZOS_G + 0.5
    val = _SQRT_TWO_PI * t ** (w + 0.5) * cmath.exp(-t) * acc
    if isinstance(s, complex) and s.imag != 0.0:
        return val
    return val.real


def reflection_check(s: float) -> tuple[float, float]:
    """Return (Gamma(s)*Gamma(1-s), pi/sin(pi*s)) for 0 < s < 1."""
    if not 0.0 < s < 1.0:
        raise ValueError("s must lie in (0, 1)")
    return gamma(s) * gamma(1.0 - s), math.pi / math.sin(math.pi * s)


_ERF_GUARANTEE_IM = 30.0


def erf(z):
    """Error function (2/sqrt(pi)) * int_0^z exp(-t^2) dt along the straight path.

    Real arguments take the library fast path; complex arguments are computed
    by adaptive quadrature of the defining integral on the segment [0, z].
    Accuracy degrades once |Im z| leaves the guarantee window.
    """
    if not isinstance(z, complex) or z.imag == 0.0:
        return math.erf(complex(z).real)
    if abs(z.imag) > _ERF_GUARANTEE_IM:
        warnings.warn(
            f"erf accuracy not guaranteed for |Im z| > {_ERF_GUARANTEE_IM}",
            RuntimeWarning,
            stacklevel=2,
        )
    if z == 0:
        return 0.0 + 0.0j

    def integrand_re(s: float) -> float:
        return cmath.exp(-(z * s) ** 2).real

    def integrand_im(s: float) -> float:
        return cmath.exp(-(z * s) ** 2).imag

    re, _ = quad(integrand_re, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    im, _ = quad(integrand_im, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    return 2.0 / math.sqrt(math.pi) * z * complex(re, im)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean: common limit of coupled means, quadratically convergent."""
    if not (a > 0 and b > 0):
        raise ValueError("agm requires strictly positive arguments")
    for _ in range(64):
        if abs(a - b) < 1e-15 * max(a, b):
            return (a + b) / 2.0
        a, b = (a + b) / 2.0, math.sqrt(a * b)
    raise RuntimeError("agm failed to converge in 64 iterations")


def omega_relations(space: SymplecticSpace, v, w) -> tuple[float, float, float]:
    """Residuals of the three compatibility relations tying omega, g and J.

    All three vanish for a valid space: omega(v,w) = g(Jv,w),
    omega(v,Jw) = g(v,w) and omega(Jv,Jw) = omega(v,w).
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != (space.d,) or w.shape != (space.d,):
        raise ValueError(f"vectors must have dimension {space.d}")
    jv = space.apply_j(v)
    jw = space.apply_j(w)
    r1 = space.omega(v, w) - space.g(jv, w)
    r2 = space.omega(v, jw) - space.g(v, w)
    r3 = space.omega(jv, jw) - space.omega(v, w)
    return r1, r2, r3
