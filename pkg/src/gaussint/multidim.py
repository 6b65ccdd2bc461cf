"""n-dimensional Gaussian integrals: quadratic forms, the oscillatory Fourier
transform with its signature phase, generating functions and pairing moments,
homogeneous-function integrals and the Hermitian-matrix ensemble constant."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import ComplexSymMatrix, RealSpdMatrix, gamma
from .oracle import pairings

__all__ = [
    "HomogeneousSpec",
    "HermitianPoint",
    "gauss_nd",
    "sphere_area",
    "gauss_spd",
    "hormander_ft",
    "signature",
    "generating_z",
    "wick_moment",
    "homog_integral",
    "homog_power_form",
    "hermitian_ensemble_norm",
    "trace_form",
]


@dataclass(frozen=True)
class HomogeneousSpec:
    """A weighted-homogeneous profile: weights alpha_i and the measure of its unit ball."""

    n: int
    weights: tuple[float, ...]
    unit_ball_measure: float

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.weights) != self.n:
            raise ValueError("need one positive weight per dimension")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if not (self.unit_ball_measure > 0 and math.isfinite(self.unit_ball_measure)):
            raise ValueError("unit_ball_measure must be finite and positive")

    @property
    def weight(self) -> float:
        return float(sum(self.weights))


class HermitianPoint:
    """A point of the N x N Hermitian-matrix space in real coordinates.

    Coordinate order is (diagonal entries, then upper-triangle real parts
    row-major, then upper-triangle imaginary parts row-major), N^2 reals total.
    """

    def __init__(self, N: int, diagonal, x_off, y_off) -> None:
        if N < 1:
            raise ValueError("N must be >= 1")
        m = N * (N - 1) // 2
        diagonal = tuple(float(v) for v in diagonal)
        x_off = tuple(float(v) for v in x_off)
        y_off = tuple(float(v) for v in y_off)
        if len(diagonal) != N or len(x_off) != m or len(y_off) != m:
            raise ValueError("coordinate blocks have wrong lengths")
        self.N = N
        self.diagonal = diagonal
        self.x_off = x_off
        self.y_off = y_off

    @classmethod
    def from_coords(cls, N: int, coords) -> "HermitianPoint":
        coords = np.asarray(coords, dtype=float)
        if coords.shape != (N * N,):
            raise ValueError(f"expected {N * N} coordinates")
        m = N * (N - 1) // 2
        return cls(N, coords[:N], coords[N : N + m], coords[N + m :])

    def coords(self) -> np.ndarray:
        return np.array(self.diagonal + self.x_off + self.y_off)

    def to_matrix(self) -> np.ndarray:
        h = np.zeros((self.N, self.N), dtype=complex)
        np.fill_diagonal(h, self.diagonal)
        idx = 0
        for i in range(self.N):
            for j in range(i + 1, self.N):
                h[i, j] = self.x_off[idx] + 1j * self.y_off[idx]
                h[j, i] = np.conj(h[i, j])
                idx += 1
        return h


def gauss_nd(n: int) -> float:
    """pi^{n/2}: the integral of exp(-|x|^2) over R^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.pi ** (n / 2.0)


def sphere_area(n: int) -> float:
    """Surface measure of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 * math.pi ** (n / 2.0) / gamma(n / 2.0)


def gauss_spd(a: RealSpdMatrix) -> float:
    """sqrt(pi^n / det A) for the integral of exp(-<Ax, x>)."""
    return math.sqrt(math.pi**a.n / a.det())


def signature(a0) -> int:
    """Number of positive minus number of negative eigenvalues of a real
    symmetric nonsingular matrix."""
    a0 = np.asarray(a0, dtype=float)
    eigs = np.linalg.eigvalsh((a0 + a0.T) / 2.0)
    if np.min(np.abs(eigs)) < 1e-12 * (1 + np.max(np.abs(eigs))):
        raise ValueError("matrix is singular")
    return int(np.sum(eigs > 0) - np.sum(eigs < 0))


def hormander_ft(a: ComplexSymMatrix, xi) -> complex:
    """Fourier transform at xi of exp(-<Ax, x>/2) for admissible complex symmetric A.

    General branch: (2 pi)^{n/2} (det B)^{1/2} exp(-<B xi, xi>/2), B = A^{-1},
    with the square root fixed by continuous deformation from the identity.
    Since every eigenvalue path (1-t) + t*lambda stays inside the closed right
    half plane, that branch is the product of principal square roots.

    Purely imaginary A = -i A0 instead gives
    (2 pi)^{n/2} |det A0|^{-1/2} exp(i pi sgn(A0)/4 - (i/2) <A0^{-1} xi, xi>).
    """
    xi = np.asarray(xi, dtype=float)
    n = a.n
    if xi.shape != (n,):
        raise ValueError(f"xi must be a real {n}-vector")
    if a.is_purely_imaginary:
        a0 = np.asarray(a.entries.imag * -1.0)  # A = -i A0  =>  A0 = i A
        sgn = signature(a0)
        a0_inv = np.linalg.inv(a0)
        phase = 1j * math.pi * sgn / 4.0 - 0.5j * float(xi @ a0_inv @ xi)
        return (2.0 * math.pi) ** (n / 2.0) * abs(np.linalg.det(a0)) ** -0.5 * cmath.exp(phase)

    eigs = np.linalg.eigvals(a.entries)
    if any(lam.real < -1e-12 * abs(lam) and abs(lam.imag) < 1e-12 * abs(lam) for lam in eigs):
        raise ValueError("deformation crosses zero: square-root branch ambiguous")
    cond = np.linalg.cond(a.entries)
    if cond > 1e12:
        raise ValueError(f"matrix too ill-conditioned (cond={cond:.3e})")
    b = np.linalg.inv(a.entries)
    sqrt_det_b = complex(np.prod([1.0 / cmath.sqrt(lam) for lam in eigs]))
    return (
        (2.0 * math.pi) ** (n / 2.0)
        * sqrt_det_b
        * cmath.exp(-0.5 * complex(xi @ b @ xi))
    )


def generating_z(a: RealSpdMatrix, j) -> float:
    """(2 pi)^{n/2} det(A)^{-1/2} exp(J^T A^{-1} J / 2): the source-term
    generating function of the Gaussian weight exp(-x^T A x / 2)."""
    j = np.asarray(j, dtype=float)
    if j.shape != (a.n,):
        raise ValueError(f"J must be a real {a.n}-vector")
    z0 = (2.0 * math.pi) ** (a.n / 2.0) / math.sqrt(a.det())
    return z0 * math.exp(0.5 * float(j @ a.inverse() @ j))


def wick_moment(a: RealSpdMatrix, indices) -> float:
    """Unnormalized moment <x_{i1} ... x_{i2m}> under exp(-x^T A x / 2).

    Equals Z_0 times the sum over perfect matchings of products of inverse
    entries. An odd number of indices returns exactly 0: the integrand is odd
    under x -> -x, so the moment vanishes identically.
    """
    labels = list(indices)
    if any(not (1 <= i <= a.n) for i in labels):
        raise ValueError(f"indices must lie in 1..{a.n}")
    if len(labels) % 2 != 0:
        return 0.0
    inv = a.inverse()
    z0 = (2.0 * math.pi) ** (a.n / 2.0) / math.sqrt(a.det())
    total = 0.0
    for matching in pairings(labels):
        prod = 1.0
        for i, j in matching:
            prod *= inv[i - 1, j - 1]
        total += prod
    return z0 * total


def homog_integral(spec: HomogeneousSpec) -> float:
    """Leb(unit ball) * Gamma(p + 1) with p the total weight.

    The factorial of the (possibly fractional) weight is read as Gamma(p+1);
    half-integer weights are the bread-and-butter case.
    """
    return spec.unit_ball_measure * gamma(spec.weight + 1.0)


def homog_power_form(c: float, p: float, a: RealSpdMatrix) -> float:
    """(pi/c)^{n/2} det(A)^{-1/2} Gamma(n/2p + 1)/Gamma(n/2 + 1):
    the integral of exp(-(c <Ax, x>)^p)."""
    if not (c > 0 and p > 0):
        raise ValueError("c and p must be > 0")
    n = a.n
    return (
        (math.pi / c) ** (n / 2.0)
        / math.sqrt(a.det())
        * gamma(n / (2.0 * p) + 1.0)
        / gamma(n / 2.0 + 1.0)
    )


def trace_form(h: HermitianPoint) -> float:
    """Tr(H^2) expressed in real coordinates: sum of squared diagonals plus
    twice the squared off-diagonal parts; the diagonal quadratic form (Bh, h)."""
    return float(
        sum(v * v for v in h.diagonal)
        + 2.0 * sum(v * v for v in h.x_off)
        + 2.0 * sum(v * v for v in h.y_off)
    )


def trace_form_matrix(N: int) -> np.ndarray:
    """The diagonal matrix B with ones on the N diagonal slots and twos on the
    off-diagonal slots, so that Tr(H^2) = (B h, h)."""
    m = N * (N - 1) // 2
    return np.diag([1.0] * N + [2.0] * (2 * m))


def hermitian_ensemble_norm(N: int) -> float:
    """sqrt(2 pi)^{N^2} / 2^{(N^2 - N)/2}: the Lebesgue integral of
    exp(-Tr(H^2)/2) over N x N Hermitian matrices."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return math.sqrt(2.0 * math.pi) ** (N * N) / 2.0 ** ((N * N - N) / 2.0)
