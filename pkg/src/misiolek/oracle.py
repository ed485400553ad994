"""Brute-force verification path for the structure constants.

Everything here is floating point on purpose: harmonics are evaluated
pointwise from Legendre recurrences, Poisson brackets are formed from
analytic derivatives on a Gauss-Legendre x uniform grid, and structure
constants are recovered by projection.  Agreement with the exact Dowker
pipeline is the central anti-drift check of the whole artifact.

Convention: the Condon-Shortley phase (-1)^m multiplies positive orders
only, which is the unique reading that satisfies the conjugation identity
Y*_{lm} = (-1)^m Y_{l,-m}; the Legendre recurrences are phase-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import numpy as np

from .structure import HarmonicIndex

ArrayLike = Union[float, np.ndarray]


def legendre_p(l: int, m: int, mu: ArrayLike) -> ArrayLike:
    """Associated Legendre function P^m_l (Ferrers, no phase), 0 <= m <= l.

    Plain upward recurrence in the degree; adequate for the moderate
    degrees the oracle grids ever see.
    """
    if not 0 <= m <= l:
        raise ValueError("requires 0 <= m <= l")
    mu = np.asarray(mu, dtype=float)
    s = np.sqrt(1.0 - mu * mu)
    # P^m_m = (2m-1)!! * s^m
    p_mm = np.ones_like(mu)
    for k in range(1, m + 1):
        p_mm = p_mm * (2 * k - 1) * s
    if l == m:
        return p_mm
    p_prev, p_cur = p_mm, mu * (2 * m + 1) * p_mm
    for deg in range(m + 2, l + 1):
        p_prev, p_cur = p_cur, (mu * (2 * deg - 1) * p_cur - (deg + m - 1) * p_prev) / (deg - m)
    return p_cur


def legendre_p_deriv(l: int, m: int, mu: ArrayLike) -> ArrayLike:
    """d/dmu of P^m_l via (1-mu^2) P' = (l+m) P_{l-1} - l mu P_l.

    Valid away from the poles; quadrature nodes are interior so this is
    never evaluated at mu = +-1.
    """
    mu = np.asarray(mu, dtype=float)
    below = legendre_p(l - 1, m, mu) if l - 1 >= m else np.zeros_like(mu)
    return ((l + m) * below - l * mu * legendre_p(l, m, mu)) / (1.0 - mu * mu)


def _norm_coeff(l: int, m: int) -> float:
    """C^m_l = phase * sqrt((2l+1)/(4 pi) (l-|m|)!/(l+|m|)!), exact ratio first."""
    am = abs(m)
    ratio = Fraction(math.factorial(l - am), math.factorial(l + am))
    phase = -1.0 if (m > 0 and m % 2) else 1.0
    return phase * math.sqrt((2 * l + 1) * float(ratio) / (4.0 * math.pi))


def ylm_eval(idx: HarmonicIndex, lam: ArrayLike, mu: ArrayLike) -> complex:
    """Complex spherical harmonic C^m_l P^{|m|}_l(mu) e^{i m lambda}."""
    return _norm_coeff(idx.l, idx.m) * legendre_p(idx.l, abs(idx.m), mu) * np.exp(1j * idx.m * np.asarray(lam))


@dataclass
class GridFunction:
    """Complex samples on a grid with analytic derivative fields alongside."""

    values: np.ndarray
    d_lam: Optional[np.ndarray] = None
    d_mu: Optional[np.ndarray] = None
    band_limit: int = 0

    def has_derivatives(self) -> bool:
        return self.d_lam is not None and self.d_mu is not None


@dataclass
class QuadratureGrid:
    """Gauss-Legendre nodes in mu times a uniform periodic rule in lambda.

    With n_mu >= l_max+1 the mu rule is exact for polynomial integrands up
    to degree 2 l_max + 1 and the lambda rule for trigonometric orders up to
    n_lam - 1; the sizing below leaves margin for triple products.
    """

    l_max: int
    mu: np.ndarray
    mu_weights: np.ndarray
    lam: np.ndarray
    lam_weight: float
    _harmonics: Dict[Tuple[int, int], GridFunction] = field(default_factory=dict, repr=False)

    @classmethod
    def for_degree(cls, l_max: int) -> "QuadratureGrid":
        if l_max < 0:
            raise ValueError("l_max must be nonnegative")
        n_mu = 2 * l_max + 2
        n_lam = 4 * l_max + 4
        mu, w = np.polynomial.legendre.leggauss(n_mu)
        lam = 2.0 * math.pi * np.arange(n_lam) / n_lam
        return cls(l_max, mu, w, lam, 2.0 * math.pi / n_lam)

    def integrate(self, values: np.ndarray) -> complex:
        """Integral over the sphere, dA = d(lambda) d(mu); values[i_mu, i_lam]."""
        return complex(self.mu_weights @ values.sum(axis=1)) * self.lam_weight

    def pair_plain(self, f: GridFunction, g: GridFunction) -> complex:
        """Unconjugated pairing <f, g> = integral of f*g."""
        return self.integrate(f.values * g.values)

    def pair_conjugated(self, f: GridFunction, g: GridFunction) -> complex:
        """Hermitian pairing integral of f * conj(g)."""
        return self.integrate(f.values * np.conj(g.values))

    def harmonic(self, idx: HarmonicIndex) -> GridFunction:
        """Y_{lm} sampled with its analytic lambda- and mu-derivatives."""
        if idx.l > self.l_max:
            raise ValueError(f"degree {idx.l} exceeds grid resolution l_max={self.l_max}")
        key = (idx.l, idx.m)
        cached = self._harmonics.get(key)
        if cached is not None:
            return cached
        am = abs(idx.m)
        coeff = _norm_coeff(idx.l, idx.m)
        p = coeff * np.asarray(legendre_p(idx.l, am, self.mu))
        dp = coeff * np.asarray(legendre_p_deriv(idx.l, am, self.mu))
        phase = np.exp(1j * idx.m * self.lam)
        values = p[:, None] * phase[None, :]
        fn = GridFunction(
            values=values,
            d_lam=1j * idx.m * values,
            d_mu=dp[:, None] * phase[None, :],
            band_limit=idx.l,
        )
        self._harmonics[key] = fn
        return fn

    def mu_field(self) -> GridFunction:
        """The coordinate function mu with its trivial derivatives."""
        ones = np.ones((len(self.mu), len(self.lam)))
        return GridFunction(
            values=self.mu[:, None] * np.ones(len(self.lam))[None, :] + 0j,
            d_lam=np.zeros_like(ones, dtype=complex),
            d_mu=ones.astype(complex),
            band_limit=1,
        )


def poisson_bracket(f: GridFunction, g: GridFunction) -> GridFunction:
    """{f, g} = f_lam g_mu - f_mu g_lam, pointwise from analytic derivatives."""
    if not (f.has_derivatives() and g.has_derivatives()):
        raise ValueError("both inputs must carry derivative fields")
    return GridFunction(
        values=f.d_lam * g.d_mu - f.d_mu * g.d_lam,
        band_limit=f.band_limit + g.band_limit,
    )


def oracle_structure_coeff(l1: int, m1: int, l2: int, m2: int, l3: int, m3: int,
                           grid: Optional[QuadratureGrid] = None) -> complex:
    """Projection coefficient G^{l3 m3} of {Y_{l1 m1}, Y_{l2 m2}} onto Y_{l3 m3}.

    Computed entirely on the grid, independent of the exact pipeline.  The
    grid must resolve all three degrees.
    """
    if grid is None:
        grid = QuadratureGrid.for_degree(max(l1, l2, l3))
    if max(l1, l2, l3) > grid.l_max:
        raise ValueError(f"degrees exceed grid resolution l_max={grid.l_max}")
    bracket = poisson_bracket(grid.harmonic(HarmonicIndex(l1, m1)), grid.harmonic(HarmonicIndex(l2, m2)))
    return grid.pair_conjugated(bracket, grid.harmonic(HarmonicIndex(l3, m3)))
