"""Boys functions and the three s-type molecular integrals over Gaussian
primitives: overlap, kinetic energy and nuclear attraction, plus the
two-center product rule that powers them."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "GaussianPrimitive",
    "ProductGaussian",
    "boys_f",
    "gaussian_product",
    "overlap",
    "kinetic",
    "nuclear_attraction",
    "nuclear_attraction_bare",
    "inverse_r_gaussian",
]


@dataclass(frozen=True)
class GaussianPrimitive:
    """s-type primitive exp(-a |r - center|^2)."""

    center: tuple[float, float, float]
    exponent: float

    def __post_init__(self) -> None:
        if len(self.center) != 3:
            raise ValueError("center must be a 3-vector")
        if not self.exponent > 0:
            raise ValueError("exponent must be > 0")
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))

    def __call__(self, x: float, y: float, z: float) -> float:
        ax, ay, az = self.center
        r2 = (x - ax) ** 2 + (y - ay) ** 2 + (z - az) ** 2
        return math.exp(-self.exponent * r2)


@dataclass(frozen=True)
class ProductGaussian:
    """Combined primitive from the two-center product rule.

    p = a + b is the total exponent, mu = ab/p the reduced exponent, P the
    exponent-weighted center, and prefactor = exp(-mu S) with S the squared
    center separation.
    """

    p: float
    P: tuple[float, float, float]
    mu: float
    prefactor: float


_SMALL_X = 1e-6
_LARGE_X_UPWARD = 60.0


def _boys_series(n: int, x: float, max_terms: int = 200) -> float:
    """Positive-term confluent series: e^{-x} sum_k (2x)^k / prod (2n+1..2n+2k+1)."""
    term = 1.0 / (2 * n + 1)
    total = term
    for k in range(1, max_terms):
        term *= 2.0 * x / (2 * n + 2 * k + 1)
        total += term
        if term < 1e-17 * total:
            break
    return math.exp(-x) * total


def boys_f(n: int, x: float) -> float:
    """F_n(x) = int_0^1 exp(-x t^2) t^{2n} dt.

    F_0 goes through erf except at tiny x, where the series avoids the 0/0
    cancellation. Higher orders run the downward recursion
    F_n = (2x F_{n+1} + e^{-x}) / (2n+1) from twelve orders above, seeded by
    the positive-term series; downward is stable where upward is not. Far in
    the tail (x large compared to n) the upward recursion is stable too and
    takes over, seeded by the asymptotic F_0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if x < 0:
        raise ValueError("x must be >= 0")
    if n == 0:
        if x <= _SMALL_X:
            return 1.0 - x / 3.0 + x * x / 10.0
        sx = math.sqrt(x)
        return 0.5 * math.sqrt(math.pi / x) * math.erf(sx)
    if x >= n + _LARGE_X_UPWARD:
        # amplification factor (2j+1)/(2x) < 1 throughout this regime
        f = boys_f(0, x)
        ex = math.exp(-x)
        for j in range(n):
            f = ((2 * j + 1) * f - ex) / (2.0 * x)
        return f
    top = n + 12
    f = _boys_series(top, x)
    ex = math.exp(-x)
    for j in range(top - 1, n - 1, -1):
        f = (2.0 * x * f + ex) / (2 * j + 1)
    return f


def gaussian_product(g1: GaussianPrimitive, g2: GaussianPrimitive) -> ProductGaussian:
    """Two-center product rule: exp(-a r_A^2) exp(-b r_B^2) equals
    prefactor times exp(-p r_P^2) pointwise."""
    a, b = g1.exponent, g2.exponent
    p = a + b
    mu = a * b / p
    center = tuple((a * ca + b * cb) / p for ca, cb in zip(g1.center, g2.center))
    s = sum((ca - cb) ** 2 for ca, cb in zip(g1.center, g2.center))
    return ProductGaussian(p=p, P=center, mu=mu, prefactor=math.exp(-mu * s))


def _separation_sq(g1: GaussianPrimitive, g2: GaussianPrimitive) -> float:
    return sum((ca - cb) ** 2 for ca, cb in zip(g1.center, g2.center))


def overlap(g1: GaussianPrimitive, g2: GaussianPrimitive) -> float:
    """(pi/(a+b))^{3/2} exp(-ab S / (a+b)) with S the squared center distance."""
    a, b = g1.exponent, g2.exponent
    s = _separation_sq(g1, g2)
    return (math.pi / (a + b)) ** 1.5 * math.exp(-a * b * s / (a + b))


def kinetic(g1: GaussianPrimitive, g2: GaussianPrimitive) -> float:
    """Matrix element of -Laplacian/2 between the two primitives:
    (pi/p)^{3/2} (3ab/p - 2S a^2 b^2 / p^2) exp(-ab S / p)."""
    a, b = g1.exponent, g2.exponent
    p = a + b
    s = _separation_sq(g1, g2)
    return (
        (math.pi / p) ** 1.5
        * (3.0 * a * b / p - 2.0 * s * a * a * b * b / (p * p))
        * math.exp(-a * b * s / p)
    )


def nuclear_attraction(
    g1: GaussianPrimitive, g2: GaussianPrimitive, c: tuple[float, float, float]
) -> float:
    """Coulomb attraction integral of the pair against a nucleus at c:
    (2 pi / p) F_0(p |C - P|^2) exp(-mu S).

    The product-rule prefactor exp(-mu S) is part of the value; dropping it is
    only correct for concentric primitives (see nuclear_attraction_bare).
    """
    prod = gaussian_product(g1, g2)
    r_cp2 = sum((cc - pc) ** 2 for cc, pc in zip(c, prod.P))
    return 2.0 * math.pi / prod.p * boys_f(0, prod.p * r_cp2) * prod.prefactor


def nuclear_attraction_bare(
    g1: GaussianPrimitive, g2: GaussianPrimitive, c: tuple[float, float, float]
) -> float:
    """The same integral without the product prefactor, as sometimes quoted.

    Kept for adjudication: it disagrees with quadrature whenever the two
    centers differ.
    """
    prod = gaussian_product(g1, g2)
    r_cp2 = sum((cc - pc) ** 2 for cc, pc in zip(c, prod.P))
    return 2.0 * math.pi / prod.p * boys_f(0, prod.p * r_cp2)


def inverse_r_gaussian(r: float) -> float:
    """1/r written as the Gaussian average (1/sqrt(pi)) int exp(-r^2 t^2) dt."""
    if not r > 0:
        raise ValueError("r must be > 0")
    return 1.0 / r
