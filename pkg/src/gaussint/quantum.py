"""Phase-space Gaussian integrals driven by a small positive scale parameter:
the five quadratic-exponent families, the radial Laplace expansion of amplitude
integrals, and the perturbative source-term series.

Two closed forms here deliberately differ from their published statements: the
rotation-angle family's phase carries exp(-i (pi/2 - theta) n / 2) and the pure
free-propagator family evaluates to (pi hbar)^{n/2} exp(i |w-u|^2 / 4 hbar)
exp(i pi n / 4). Both were re-derived and confirmed against damped-oscillatory
quadrature; the published variants are kept in the identity catalog as
suspected misprints (`*_paper_*` entries) so the disagreement stays visible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import SymplecticSpace, gamma

__all__ = [
    "PhasePoint",
    "LaplaceExpansion",
    "RadialAmplitude",
    "g1_integral",
    "g2_integral",
    "g3_integral",
    "g4_integral",
    "g4_paper_form",
    "g5_integral",
    "g5_paper_form",
    "laplace_expand",
    "perturbed_gauss",
    "PerturbationResult",
    "standard_omega",
]


@dataclass(frozen=True)
class PhasePoint:
    """A triple of same-dimension real vectors with the symplectic structure they live in."""

    v: tuple[float, ...]
    w: tuple[float, ...]
    u: tuple[float, ...]
    space: SymplecticSpace

    def __post_init__(self) -> None:
        n = len(self.v)
        if len(self.w) != n or len(self.u) != n:
            raise ValueError("v, w, u must share one dimension")
        if self.space.d != n:
            raise ValueError("space dimension must match the vectors")


def _check_even_dim(w: np.ndarray, n: int) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError("the pairing form needs an even dimension >= 2")
    if w.shape != (n,):
        raise ValueError(f"vector must have dimension {n}")


def standard_omega(n: int) -> SymplecticSpace:
    """The standard block-J symplectic structure on R^n (n even)."""
    return SymplecticSpace(n)


def _require_hbar(hbar: float) -> None:
    if not hbar > 0:
        raise ValueError("hbar must be > 0")


def g1_integral(w, n: int, hbar: float) -> complex:
    """(2 pi hbar)^{n/2} exp(-|w|^2 / 2 hbar): the integral over v of
    exp(-i omega(v,w)/hbar - |v-w|^2 / 2 hbar)."""
    _require_hbar(hbar)
    w = np.asarray(w, dtype=float)
    _check_even_dim(w, n)
    return (2.0 * math.pi * hbar) ** (n / 2.0) * math.exp(-float(w @ w) / (2.0 * hbar))


def g2_integral(w, u, n: int, hbar: float) -> complex:
    """(2 pi hbar)^{n/2} exp(-|w+u|^2 / 2 hbar): same family with exponent
    +i omega(v, w+u)/hbar - |v|^2 / 2 hbar."""
    _require_hbar(hbar)
    w = np.asarray(w, dtype=float)
    u = np.asarray(u, dtype=float)
    _check_even_dim(w, n)
    _check_even_dim(u, n)
    s = w + u
    return (2.0 * math.pi * hbar) ** (n / 2.0) * math.exp(-float(s @ s) / (2.0 * hbar))


def g1_phase(v, u, space: SymplecticSpace) -> complex:
    """The quadratic exponent omega(v,u) - (i/2)|v-u|^2 reused by the
    composition law."""
    v = np.asarray(v, dtype=float)
    u = np.asarray(u, dtype=float)
    d = v - u
    return space.omega(v, u) - 0.5j * float(d @ d)


def g3_integral(v, u, n: int, hbar: float) -> complex:
    """(pi hbar)^{n/2} exp(-(i/hbar) g1(v,u)): integrating the middle point of
    the two-step kernel reproduces the one-step kernel up to (pi hbar)^{n/2}."""
    _require_hbar(hbar)
    v = np.asarray(v, dtype=float)
    u = np.asarray(u, dtype=float)
    _check_even_dim(v, n)
    _check_even_dim(u, n)
    space = standard_omega(n)
    return (math.pi * hbar) ** (n / 2.0) * cmath.exp(-1j / hbar * g1_phase(v, u, space))


def g4_integral(theta: float, n: int, hbar: float) -> complex:
    """2^{n/2} (hbar pi)^n sin^{n/2}(theta) exp(-i (pi/2 - theta) n / 2):
    the rotation-angle family integrated over both phase-space slots.

    Any n >= 1 is accepted: the pairing term omega(v, Jw) reduces to the plain
    dot product v.w, which needs no complex structure. theta must avoid the
    cotangent singularities at 0 and pi.
    """
    _require_hbar(hbar)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 < theta < math.pi:
        raise ValueError("theta must lie strictly inside (0, pi)")
    return (
        2.0 ** (n / 2.0)
        * (hbar * math.pi) ** n
        * math.sin(theta) ** (n / 2.0)
        * cmath.exp(-1j * (math.pi / 2.0 - theta) * n / 2.0)
    )


def g4_paper_form(theta: float, n: int, hbar: float) -> complex:
    """The published variant of g4_integral, with the opposite phase sign.

    Kept verbatim for erratum adjudication; disagrees with quadrature away
    from theta = pi/2.
    """
    _require_hbar(hbar)
    if not 0.0 < theta < math.pi:
        raise ValueError("theta must lie strictly inside (0, pi)")
    return (
        2.0 ** (n / 2.0)
        * (hbar * math.pi) ** n
        * math.sin(theta) ** (n / 2.0)
        * cmath.exp(1j * (math.pi / 2.0 - theta) * n / 2.0)
    )


def g5_integral(w, u, n: int, hbar: float) -> complex:
    """(pi hbar)^{n/2} exp(i |w-u|^2 / 4 hbar) exp(i pi n / 4): the pure
    oscillatory two-chord integral over the middle point."""
    _require_hbar(hbar)
    w = np.asarray(w, dtype=float)
    u = np.asarray(u, dtype=float)
    if w.shape != (n,) or u.shape != (n,):
        raise ValueError(f"vectors must have dimension {n}")
    d = w - u
    return (
        (math.pi * hbar) ** (n / 2.0)
        * cmath.exp(1j * float(d @ d) / (4.0 * hbar))
        * cmath.exp(1j * math.pi * n / 4.0)
    )


def g5_paper_form(w, u, n: int, hbar: float) -> complex:
    """The published variant: (2 pi hbar)^{n/2} exp(i |(w-u)/2|^2 / 2 hbar)
    exp(i pi n / 4). Kept verbatim for erratum adjudication."""
    _require_hbar(hbar)
    w = np.asarray(w, dtype=float)
    u = np.asarray(u, dtype=float)
    d = (w - u) / 2.0
    return (
        (2.0 * math.pi * hbar) ** (n / 2.0)
        * cmath.exp(1j * float(d @ d) / (2.0 * hbar))
        * cmath.exp(1j * math.pi * n / 4.0)
    )


@dataclass(frozen=True)
class RadialAmplitude:
    """Amplitude depending on the offset radius only: profile r -> A and its
    Taylor coefficients (a0, a1, a2, ...) at r = 0."""

    profile: Callable[[float], float]
    coeffs: tuple[float, ...]


@dataclass(frozen=True)
class LaplaceExpansion:
    """Expansion of an amplitude integral in half-integer powers of the scale.

    terms is a tuple of (power, coefficient); value(hbar) sums
    coefficient * hbar^power.
    """

    terms: tuple[tuple[float, float], ...]
    order: int

    def __post_init__(self) -> None:
        powers = [p for p, _ in self.terms]
        if any(b <= a for a, b in zip(powers, powers[1:])):
            raise ValueError("powers must be strictly increasing")

    def value(self, hbar: float) -> float:
        if not hbar > 0:
            raise ValueError("hbar must be > 0")
        return float(sum(c * hbar**p for p, c in self.terms))


def radial_moment_coefficient(n: int, k: int) -> float:
    """Coefficient of hbar^{(n+k)/2} in the k-th radial moment of the
    Gaussian weight: int |u|^k exp(-|u|^2 / 2 hbar) du over R^n."""
    return (
        math.pi ** (n / 2.0)
        * 2.0 ** ((n + k) / 2.0)
        * gamma((n + k) / 2.0)
        / gamma(n / 2.0)
    )


def laplace_expand(amplitude: RadialAmplitude, n: int, order: int = 2) -> LaplaceExpansion:
    """Expansion of int A(|v-w|) exp(-|v-w|^2 / 2 hbar) dv through the given order.

    Term k pairs the k-th radial Taylor coefficient of the amplitude with the
    k-th radial moment of the Gaussian weight; the leading term is
    A(0) (2 pi hbar)^{n/2}. Orders above 2 are out of scope.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= order <= 2:
        raise ValueError("order must be 0, 1 or 2")
    coeffs = amplitude.coeffs
    terms = []
    for k in range(order + 1):
        a_k = coeffs[k] if k < len(coeffs) else 0.0
        terms.append(((n + k) / 2.0, a_k * radial_moment_coefficient(n, k)))
    return LaplaceExpansion(terms=tuple(terms), order=order)


@dataclass(frozen=True)
class PerturbationResult:
    """Value of the truncated perturbative series plus how it was truncated."""

    value: float
    terms_used: int
    tail_estimate: float
    formal: bool
    truncated_at_min_term: bool


def perturbed_gauss(
    a: float,
    lam: float,
    k: int,
    j: float,
    ctrl=None,
) -> PerturbationResult:
    """Series value of int exp(-a x^2 / 2 + (lam/k!) x^k + J x) dx.

    Expands the perturbation into source-derivative strikes on the unperturbed
    closed form sqrt(2 pi / a) exp(J^2 / 2a); every derivative is taken by the
    exact polynomial recurrence, never numerically. For even k with lam < 0
    the series is convergent or asymptotic to a convergent integral; otherwise
    the defining integral may diverge and the result is flagged formal. When
    the terms start growing the sum is truncated at the smallest term.
    """
    from .core import TruncationControl

    if ctrl is None:
        ctrl = TruncationControl(max_terms=80, tail_tol=1e-14)
    if not a > 0:
        raise ValueError("a must be > 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    formal = (k % 2 == 1 and lam != 0.0) or lam > 0.0

    base = math.sqrt(2.0 * math.pi / a) * math.exp(j * j / (2.0 * a))
    # H_m with d^m/dJ^m exp(J^2/2a) = H_m(J) exp(J^2/2a); H_{m+1} = H_m' + (J/a) H_m
    polys = [np.array([1.0])]

    def poly(order: int) -> np.ndarray:
        while len(polys) <= order:
            h = polys[-1]
            deriv = h[1:] * np.arange(1, len(h))
            nxt = np.concatenate(([0.0], h)) / a
            nxt[: len(deriv)] += deriv
            polys.append(nxt)
        return polys[order]

    lam_unit = lam / math.factorial(k)

    total = 0.0
    prev_mag = math.inf
    tail = 0.0
    used = 0
    truncated = False
    for m in range(ctrl.max_terms):
        h = poly(k * m)
        hval = float(np.polynomial.polynomial.polyval(j, h))
        term = (lam_unit**m) / math.factorial(m) * hval * base
        mag = abs(term)
        if m >= 1 and mag > prev_mag:
            # asymptotic tail setting in: stop at the smallest term
            tail = prev_mag
            truncated = True
            break
        total += term
        used = m + 1
        tail = 10.0 * mag
        if mag <= ctrl.tail_tol * max(1.0, abs(total)):
            break
        prev_mag = mag if mag > 0 else prev_mag
    return PerturbationResult(
        value=total,
        terms_used=used,
        tail_estimate=tail,
        formal=formal,
        truncated_at_min_term=truncated,
    )
