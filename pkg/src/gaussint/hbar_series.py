"""Scale-parameter series for quartic and cubic exponent integrals, their
arithmetic-geometric-mean cross-checks, and the truncated-product route to
Gamma ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import TruncationControl, agm, gamma

__all__ = [
    "SeriesValue",
    "quartic_series",
    "gamma_quarter_agm",
    "cubic_series",
    "gamma_third_agm",
    "gamma_product_ratio",
    "radial_quartic_nd",
]

_MIN_HBAR = 0.05


@dataclass(frozen=True)
class SeriesValue:
    value: float
    terms_used: int
    tail_estimate: float

    def __post_init__(self) -> None:
        if self.tail_estimate < 0:
            raise ValueError("tail_estimate must be >= 0")


def _sum_positive_terms(term, ctrl: TruncationControl) -> SeriesValue:
    total = 0.0
    used = 0
    mag = 0.0
    for m in range(ctrl.max_terms):
        t = term(m)
        total += t
        used = m + 1
        mag = abs(t)
        if m >= 4 and mag <= ctrl.tail_tol * max(1.0, abs(total)):
            break
    return SeriesValue(value=total, terms_used=used, tail_estimate=10.0 * mag)


def _require_fast_hbar(hbar: float) -> None:
    if not hbar > 0:
        raise ValueError("hbar must be > 0")
    if hbar < _MIN_HBAR:
        raise ValueError(
            f"series converges too slowly for hbar < {_MIN_HBAR}; refusing rather "
            "than returning a silently inaccurate sum"
        )


def quartic_series(hbar: float, ctrl: TruncationControl = TruncationControl()) -> SeriesValue:
    """(hbar^{1/4}/sqrt(2)) sum_n Gamma(n/2 + 1/4) / (hbar^{n/2} n!):
    the full-line integral of exp(-x^4/4hbar + x^2/2hbar)."""
    _require_fast_hbar(hbar)
    pref = hbar**0.25 / math.sqrt(2.0)

    def term(n: int) -> float:
        return pref * gamma(n / 2.0 + 0.25) / (hbar ** (n / 2.0) * math.factorial(n))

    return _sum_positive_terms(term, ctrl)


def gamma_quarter_agm() -> tuple[float, float]:
    """(Gamma(1/4), (2 pi)^{3/4} / agm(sqrt 2, 1)^{1/2}).

    The second entry is the mean-iteration candidate for the first; the two
    agree to full double precision (a classical lemniscatic relation,
    confirmed numerically before being relied on).
    """
    candidate = (2.0 * math.pi) ** 0.75 / math.sqrt(agm(math.sqrt(2.0), 1.0))
    return gamma(0.25), candidate


def cubic_series(hbar: float, ctrl: TruncationControl = TruncationControl()) -> SeriesValue:
    """sum_n 3^{2n/3 - 2/3} hbar^{2n/3 + 1/3} Gamma(2n/3 + 1/3) / ((2 hbar)^n n!):
    the half-line integral of exp(-x^3/3hbar + x^2/2hbar)."""
    _require_fast_hbar(hbar)

    def term(n: int) -> float:
        return (
            3.0 ** (2.0 * n / 3.0 - 2.0 / 3.0)
            * hbar ** (2.0 * n / 3.0 + 1.0 / 3.0)
            * gamma(2.0 * n / 3.0 + 1.0 / 3.0)
            / ((2.0 * hbar) ** n * math.factorial(n))
        )

    return _sum_positive_terms(term, ctrl)


def gamma_third_agm() -> tuple[float, float]:
    """(Gamma(1/3), the published mean-iteration prefactor
    pi^{1/3} 2^{-2/9} 3^{5/12} / agm(2, sqrt(2 + sqrt 3))^{1/3}).

    Unlike the quarter case the two entries do not agree; the discrepancy is
    recorded by the verification layer rather than asserted away here.
    """
    candidate = (
        math.pi ** (1.0 / 3.0)
        * 2.0 ** (-2.0 / 9.0)
        * 3.0 ** (5.0 / 12.0)
        / agm(2.0, math.sqrt(2.0 + math.sqrt(3.0))) ** (1.0 / 3.0)
    )
    return gamma(1.0 / 3.0), candidate


def gamma_product_ratio(x: float, b: float, K: int) -> float:
    """K-term product approximation of Gamma(x+b)/Gamma(x) for 0 < b < 1.

    Gamma(x+b)/Gamma(x) = (1/Gamma(1-b)) prod_k k (x+k-1) / ((k-b)(x+k-1+b)),
    a rearrangement of the Gauss limit formula. The tail decays like 1/K, so
    this is a fidelity reference, not a fast path.
    """
    if not x > 0:
        raise ValueError("x must be > 0")
    if not 0.0 < b < 1.0:
        raise ValueError("b must lie in (0, 1)")
    if K < 1:
        raise ValueError("K must be >= 1")
    prod = 1.0
    for k in range(1, K + 1):
        prod *= k * (x + k - 1.0) / ((k - b) * (x + k - 1.0 + b))
    return prod / gamma(1.0 - b)


def radial_quartic_nd(
    n: int, hbar: float, ctrl: TruncationControl = TruncationControl()
) -> tuple[SeriesValue, SeriesValue]:
    """Both series candidates for the n-dimensional radial quartic integral
    int exp(-|t|^4/4hbar + |t|^2/2hbar) dt.

    Returns (published, rederived). The published form carries the unit-ball
    volume pi^{n/2}/Gamma(n/2+1) and radial coefficient 2^{n-4}; the re-derived
    form carries the sphere area 2 pi^{n/2}/Gamma(n/2) and 2^{n/2-2}. The two
    radial coefficients coincide exactly at n = 4. Which one matches the
    integral is decided by the quadrature oracle, not here.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_fast_hbar(hbar)
    ball_volume = math.pi ** (n / 2.0) / gamma(n / 2.0 + 1.0)
    area = 2.0 * math.pi ** (n / 2.0) / gamma(n / 2.0)

    def make_term(angular: float, radial_coef: float):
        def term(m: int) -> float:
            return (
                angular
                * radial_coef
                * hbar ** ((n - 2.0 * m) / 4.0)
                * gamma((n + 2.0 * m) / 4.0)
                / math.factorial(m)
            )

        return term

    published = _sum_positive_terms(make_term(ball_volume, 2.0 ** (n - 4)), ctrl)
    rederived = _sum_positive_terms(make_term(area, 2.0 ** (n / 2.0 - 2.0)), ctrl)
    return published, rederived
