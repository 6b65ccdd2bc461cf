"""Finite exterior-algebra arithmetic and Berezin integration.

Generators come in conjugate pairs and carry one fixed canonical order:

    psi_1 < psi_1* < psi_2 < psi_2* < ...

encoded as indices 2(k-1) for psi_k and 2(k-1)+1 for psi_k*. Every sign in the
package derives from sorting monomials into this order; published claims are
adjudicated under this single documented convention. Where the source material
is self-inconsistent (the one-pair normalization r/2 versus the determinant
square root), the brute-force expansion is the ground truth and both candidate
values are returned for the verdict layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

__all__ = [
    "GrassmannElement",
    "BerezinMeasure",
    "psi",
    "psi_star",
    "g_add",
    "g_scale",
    "g_mul",
    "g_conj",
    "g_exp",
    "berezin",
    "fermionic_gaussian",
    "FermionicGaussianResult",
    "mixed_gaussian",
    "MixedGaussianResult",
    "heuristic_laplace_grassmann",
    "HeuristicGrassmannResult",
]


def _merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Sort the concatenation of two strictly increasing tuples, counting swaps.

    Returns (sorted tuple, sign); sign 0 when a generator repeats (the square
    of any generator vanishes).
    """
    merged: list[int] = []
    i = j = 0
    inversions = 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            return (), 0
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            # right[j] jumps over the remaining left entries
            inversions += len(left) - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), (-1 if inversions % 2 else 1)


class GrassmannElement:
    """Polynomial over anticommuting generators with complex coefficients.

    coefficients maps strictly increasing generator-index tuples to scalars;
    the empty tuple is the scalar part. Elements are immutable.
    """

    __slots__ = ("n_pairs", "coefficients")

    def __init__(self, n_pairs: int, coefficients: Mapping[tuple[int, ...], complex]):
        if n_pairs < 1:
            raise ValueError("n_pairs must be >= 1")
        clean: dict[tuple[int, ...], complex] = {}
        for key, c in coefficients.items():
            key = tuple(key)
            if any(b <= a for a, b in zip(key, key[1:])):
                raise ValueError(f"key {key} is not strictly increasing")
            if key and (key[0] < 0 or key[-1] >= 2 * n_pairs):
                raise ValueError(f"key {key} outside generator range")
            c = complex(c)
            if c != 0:
                clean[key] = c
        self.n_pairs = n_pairs
        self.coefficients = clean

    @classmethod
    def zero(cls, n_pairs: int) -> "GrassmannElement":
        return cls(n_pairs, {})

    @classmethod
    def scalar(cls, n_pairs: int, c: complex) -> "GrassmannElement":
        return cls(n_pairs, {(): c})

    @property
    def scalar_part(self) -> complex:
        return self.coefficients.get((), 0.0 + 0.0j)

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        return g_add(self, other)

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return g_mul(self, other)
        return g_scale(self, other)

    def __rmul__(self, other):
        return g_scale(self, other)

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return g_add(self, g_scale(other, -1.0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GrassmannElement)
            and self.n_pairs == other.n_pairs
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.n_pairs, frozenset(self.coefficients.items())))

    def __repr__(self) -> str:
        return f"GrassmannElement(n_pairs={self.n_pairs}, terms={len(self.coefficients)})"


def psi(n_pairs: int, k: int) -> GrassmannElement:
    """The generator psi_k, 1-based."""
    if not 1 <= k <= n_pairs:
        raise ValueError("generator index out of range")
    return GrassmannElement(n_pairs, {(2 * (k - 1),): 1.0})


def psi_star(n_pairs: int, k: int) -> GrassmannElement:
    """The conjugate generator psi_k*, 1-based."""
    if not 1 <= k <= n_pairs:
        raise ValueError("generator index out of range")
    return GrassmannElement(n_pairs, {(2 * (k - 1) + 1,): 1.0})


def _check_same_algebra(x: GrassmannElement, y: GrassmannElement) -> None:
    if x.n_pairs != y.n_pairs:
        raise ValueError("elements live in different algebras")


def g_add(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    _check_same_algebra(x, y)
    out = dict(x.coefficients)
    for key, c in y.coefficients.items():
        out[key] = out.get(key, 0.0) + c
    return GrassmannElement(x.n_pairs, out)


def g_scale(x: GrassmannElement, c: complex) -> GrassmannElement:
    return GrassmannElement(x.n_pairs, {k: v * c for k, v in x.coefficients.items()})


def g_mul(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    """Associative sign-correct product; squares of generators vanish."""
    _check_same_algebra(x, y)
    out: dict[tuple[int, ...], complex] = {}
    for ka, ca in x.coefficients.items():
        for kb, cb in y.coefficients.items():
            key, sign = _merge_sign(ka, kb)
            if sign == 0:
                continue
            out[key] = out.get(key, 0.0) + sign * ca * cb
    return GrassmannElement(x.n_pairs, out)


def _conj_partner(idx: int) -> int:
    return idx + 1 if idx % 2 == 0 else idx - 1


def g_conj(x: GrassmannElement) -> GrassmannElement:
    """Conjugation: reverses factor order, conjugates scalars and swaps each
    generator with its starred partner, so (psi_1 psi_2)* = psi_2* psi_1*."""
    out: dict[tuple[int, ...], complex] = {}
    for key, c in x.coefficients.items():
        mapped = [_conj_partner(i) for i in reversed(key)]
        # sort `mapped` into canonical order, tracking the permutation sign
        sign = 1
        seq = list(mapped)
        for i in range(len(seq)):
            m = min(range(i, len(seq)), key=seq.__getitem__)
            if m != i:
                seq[i], seq[m] = seq[m], seq[i]
                sign = -sign
        newkey = tuple(seq)
        out[newkey] = out.get(newkey, 0.0) + sign * np.conj(c)
    return GrassmannElement(x.n_pairs, out)


def g_exp(x: GrassmannElement) -> GrassmannElement:
    """exp(x) as the finite sum of powers of the nilpotent part.

    A scalar part is factored out as an ordinary exponential; the nilpotent
    remainder kills itself after at most 2 * n_pairs products, so the result
    is exact.
    """
    s = x.scalar_part
    nil = GrassmannElement(x.n_pairs, {k: c for k, c in x.coefficients.items() if k})
    result = GrassmannElement.scalar(x.n_pairs, 1.0)
    power = GrassmannElement.scalar(x.n_pairs, 1.0)
    fact = 1.0
    for k in range(1, 2 * x.n_pairs + 1):
        power = g_mul(power, nil)
        if not power.coefficients:
            break
        fact *= k
        result = g_add(result, g_scale(power, 1.0 / fact))
    if s != 0:
        result = g_scale(result, np.exp(s))
    return result


@dataclass(frozen=True)
class BerezinMeasure:
    """Iterated-integration order; order[0] is integrated first (innermost).

    In the written measure the innermost differential is the rightmost one, so
    d(psi_2) d(psi_1) lists as order (psi_1, psi_2).
    """

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.order)) != len(self.order):
            raise ValueError("each generator may appear at most once")


def pair_measure(n_pairs: int) -> BerezinMeasure:
    """The product measure d(psi_1*) d(psi_1) ... d(psi_n*) d(psi_n).

    Each pair block is even, so blocks commute and the iteration order across
    pairs is immaterial; within a pair the plain generator is integrated
    before its conjugate.
    """
    order: list[int] = []
    for k in range(n_pairs):
        order.extend((2 * k, 2 * k + 1))
    return BerezinMeasure(tuple(order))


def berezin(x: GrassmannElement, measure: BerezinMeasure) -> complex:
    """Iterated Berezin integral of x.

    One integration step is the left derivative in that generator (strike it
    after anticommuting it to the front), so the integral of the bare
    generator is 1 and of anything missing it is 0. Generators the measure
    omits cannot contribute to the scalar answer.
    """
    coeffs = x.coefficients
    for gen in measure.order:
        nxt: dict[tuple[int, ...], complex] = {}
        for key, c in coeffs.items():
            if gen not in key:
                continue
            pos = key.index(gen)
            sign = -1.0 if pos % 2 else 1.0
            newkey = key[:pos] + key[pos + 1 :]
            nxt[newkey] = nxt.get(newkey, 0.0) + sign * c
        coeffs = nxt
    return complex(coeffs.get((), 0.0))


def left_derivative(x: GrassmannElement, gen: int) -> GrassmannElement:
    """Left derivative with respect to one generator: anticommute it to the
    front and strike it."""
    out: dict[tuple[int, ...], complex] = {}
    for key, c in x.coefficients.items():
        if gen not in key:
            continue
        pos = key.index(gen)
        sign = -1.0 if pos % 2 else 1.0
        newkey = key[:pos] + key[pos + 1 :]
        out[newkey] = out.get(newkey, 0.0) + sign * c
    return GrassmannElement(x.n_pairs, out)


@dataclass(frozen=True)
class FermionicGaussianResult:
    """Brute-force value of the bilinear-exponent integral next to the two
    published candidates it is judged against."""

    brute_force: complex
    det_a: complex
    sqrt_det_claim: complex


def quadratic_exponent(a: np.ndarray) -> GrassmannElement:
    """The element -(1/2) sum_ij psi_i* A_ij psi_j."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    coeffs: dict[tuple[int, ...], complex] = {}
    for i in range(n):
        for j in range(n):
            if a[i, j] == 0:
                continue
            star, plain = 2 * i + 1, 2 * j
            if star == plain:
                continue
            if star < plain:
                key, sign = (star, plain), 1.0
            else:
                key, sign = (plain, star), -1.0
            coeffs[key] = coeffs.get(key, 0.0) - 0.5 * sign * a[i, j]
    return GrassmannElement(n, coeffs)


def fermionic_gaussian(a) -> FermionicGaussianResult:
    """Exact expansion of the integral of exp(-(1/2) psi* A psi) over all pairs.

    A must be Hermitian with n <= 6 (the expansion is combinatorial). The
    returned record carries det A and sqrt(det A) so callers can record which,
    if either, the brute force reproduces; under this package's conventions
    the expansion equals det(A/2).
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("A must be square")
    n = a.shape[0]
    if n > 6:
        raise ValueError("n > 6 rejected: the expansion blows up combinatorially")
    if not np.allclose(a, a.conj().T, atol=1e-12 * (1 + np.abs(a).max())):
        raise ValueError("A must be Hermitian")
    value = berezin(g_exp(quadratic_exponent(a)), pair_measure(n))
    det_a = complex(np.linalg.det(a))
    return FermionicGaussianResult(
        brute_force=value, det_a=det_a, sqrt_det_claim=np.sqrt(det_a)
    )


_K_SWEEP = (0.5, 1.0, 2.0, 4.0)


@dataclass(frozen=True)
class MixedGaussianResult:
    """Product of the anticommuting and commuting Gaussian factors with the
    flatness-in-k verdict over the fixed sweep."""

    value: float
    k: float
    sweep_ks: tuple[float, ...]
    sweep_values: tuple[float, ...]
    flatness: float
    k_independent: bool
    matches_free_value: bool


def _mixed_value(n: int, k: float) -> float:
    ferm = berezin(g_exp(quadratic_exponent(k * np.eye(n))), pair_measure(n))
    bos = (2.0 * math.pi / k) ** (n / 2.0)
    return float(ferm.real) * bos


def mixed_gaussian(n: int, k: float) -> MixedGaussianResult:
    """Anticommuting-times-commuting Gaussian with identity quadratic form.

    Evaluates the product at the requested k and over the fixed four-point
    sweep, reporting whether it is k-independent and whether it equals
    (2 pi)^{n/2}; under this package's single convention it is neither, which
    is exactly the datum the verdict layer wants.
    """
    if not 1 <= n <= 4:
        raise ValueError("n must lie in 1..4")
    if not k > 0:
        raise ValueError("k must be > 0")
    sweep = tuple(_mixed_value(n, kk) for kk in _K_SWEEP)
    flatness = max(sweep) / min(sweep) - 1.0
    free_value = (2.0 * math.pi) ** (n / 2.0)
    return MixedGaussianResult(
        value=_mixed_value(n, k),
        k=k,
        sweep_ks=_K_SWEEP,
        sweep_values=sweep,
        flatness=flatness,
        k_independent=flatness < 1e-12,
        matches_free_value=abs(sweep[1] - free_value) < 1e-12 * free_value,
    )


@dataclass(frozen=True)
class HeuristicGrassmannResult:
    brute_force: complex
    claim: float


def heuristic_laplace_grassmann(f_coeffs: tuple[float, float, float], hbar: float) -> HeuristicGrassmannResult:
    """One-pair integral of (f1 + f2 psi + f3 psi*) exp(-(k/2) psi* psi), k = 1/hbar.

    The exponent normalization is read as -(k/2) psi* psi, the parse under
    which the published value 1/(2 hbar) is reproduced for f1 = 1; the odd
    pieces f2, f3 die in the top-form extraction.
    """
    if not hbar > 0:
        raise ValueError("hbar must be > 0")
    f1, f2, f3 = f_coeffs
    k = 1.0 / hbar
    n = 1
    f = g_add(
        GrassmannElement.scalar(n, f1),
        g_add(g_scale(psi(n, 1), f2), g_scale(psi_star(n, 1), f3)),
    )
    weight = g_exp(g_scale(g_mul(psi_star(n, 1), psi(n, 1)), -k / 2.0))
    value = berezin(g_mul(f, weight), pair_measure(n))
    return HeuristicGrassmannResult(brute_force=value, claim=1.0 / (2.0 * hbar))
