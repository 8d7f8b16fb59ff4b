"""Classical complex-analysis factorizations, used as independent oracles.

Both routes live entirely in numpy and never touch the determinant
engine: the cepstral method splits the Fourier coefficients of log a on
the unit circle, and the root-split method factors a Laurent polynomial
by the location of its zeros relative to the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from .rings import Ring, RingError
from .series import InvertiblePair, LaurentSeries
from .factorization import FactorizationResult


class OracleError(ValueError):
    """Symbol outside the oracle's domain (circle zero, bad sampling)."""


def _require_complex(a: LaurentSeries) -> None:
    if a.ring.is_exact:
        raise OracleError("classical oracles require the complex ring")


def _circle_values(a: LaurentSeries, samples: int) -> np.ndarray:
    n = np.array(a.support())
    c = np.array([complex(a.coeffs[k]) for k in a.support()])
    k = np.arange(samples)
    return (c[None, :] * np.exp(2j * np.pi * np.outer(k, n) / samples)).sum(axis=1)


def _series_from_fft(ring: Ring, coeffs: np.ndarray, keep) -> LaurentSeries:
    n = len(coeffs)
    half = n // 2
    out: Dict[int, complex] = {}
    for m in range(n):
        idx = m if m < half else m - n
        if keep(idx):
            out[idx] = complex(coeffs[m])
    return LaurentSeries(ring, out, (-half, half - 1))


def cepstral_factorize(a: LaurentSeries, samples: int = 1024) -> FactorizationResult:
    """Factorization via log on the unit circle and cepstrum splitting."""
    _require_complex(a)
    if samples & (samples - 1) or samples < 8:
        raise OracleError("samples must be a power of two >= 8")
    ring = a.ring
    vals = _circle_values(a, samples)
    if np.min(np.abs(vals)) < 1e-10:
        raise OracleError("symbol (nearly) vanishes on the unit circle")
    # winding number from the unwrapped argument around the circle
    closed = np.concatenate([vals, vals[:1]])
    total = np.sum(np.angle(closed[1:] / closed[:-1]))
    p_est = total / (2 * np.pi)
    p = int(round(p_est))
    if abs(p_est - p) > 1e-2:
        raise OracleError("non-integral winding estimate %.4f (sampling too coarse?)"
                          % p_est)
    k = np.arange(samples)
    devals = vals * np.exp(-2j * np.pi * p * k / samples)
    logv = np.log(np.abs(devals)) + 1j * _unwrap_closed(np.angle(devals))
    # cepstrum: c_m = (1/N) sum_k logv_k exp(-2 pi i m k / N)
    cep = np.fft.fft(logv) / samples
    half = samples // 2
    idxs = np.array([m if m < half else m - samples for m in range(samples)])
    plus_spec = np.where(idxs > 0, cep, 0.0)
    minus_spec = np.where(idxs < 0, cep, 0.0)
    # evaluate exp(sum c_m w^m) on the circle, transform back
    plus_vals = np.exp(np.fft.ifft(plus_spec) * samples)
    minus_vals = np.exp(np.fft.ifft(minus_spec) * samples)
    plus_coeffs = np.fft.fft(plus_vals) / samples
    minus_coeffs = np.fft.fft(minus_vals) / samples
    pi_p = _series_from_fft(ring, plus_coeffs, lambda i: i >= 0)
    pi_m = _series_from_fft(ring, minus_coeffs, lambda i: i <= 0)
    const = complex(np.exp(cep[0]))
    pi_t = LaurentSeries(ring, {p: const})
    recon = pi_m.mul(pi_t).mul(pi_p)
    residual = recon.sup_diff(a.truncate(recon.window))
    return FactorizationResult(pi_m, pi_t, pi_p, residual, p)


def _unwrap_closed(angles: np.ndarray) -> np.ndarray:
    return np.unwrap(angles)


def root_split_factorize(a: LaurentSeries, circle_margin: float = 1e-6,
                         tail: int = 64) -> FactorizationResult:
    """Factorization by splitting polynomial roots at the unit circle."""
    _require_complex(a)
    if a.is_zero():
        raise OracleError("zero symbol")
    ring = a.ring
    supp = a.support()
    lo, hi = supp[0], supp[-1]
    deg = hi - lo
    coeffs = [complex(a.coeff(hi - j)) for j in range(deg + 1)]  # leading first
    roots = np.roots(coeffs) if deg > 0 else np.array([])
    if len(roots) and np.min(np.abs(np.abs(roots) - 1.0)) < circle_margin:
        raise OracleError("root within %.1e of the unit circle" % circle_margin)
    inside = [r for r in roots if abs(r) < 1.0]
    outside = [r for r in roots if abs(r) > 1.0]
    window = (-tail, tail)
    pi_m = LaurentSeries.one(ring, window)
    for r in inside:
        pi_m = pi_m.mul(LaurentSeries(ring, {0: ring.one, -1: -complex(r)}))
    pi_p = LaurentSeries.one(ring, window)
    for r in outside:
        pi_p = pi_p.mul(LaurentSeries(ring, {0: ring.one, 1: -1.0 / complex(r)}))
    const = complex(a.coeff(hi))
    for r in outside:
        const *= -complex(r)
    p = lo + len(inside)
    pi_t = LaurentSeries(ring, {p: const})
    recon = pi_m.mul(pi_t).mul(pi_p)
    residual = recon.sup_diff(a.truncate(recon.window))
    return FactorizationResult(pi_m, pi_t, pi_p, residual, p)


@dataclass
class ComparisonReport:
    diff_minus: float
    diff_tilde: float
    diff_plus: float
    winding_equal: bool

    @property
    def max_diff(self) -> float:
        return max(self.diff_minus, self.diff_tilde, self.diff_plus)


def compare(lhs: FactorizationResult, rhs: FactorizationResult) -> ComparisonReport:
    """Per-factor sup differences on the common window; never raises on
    mismatch, only reports."""
    return ComparisonReport(
        diff_minus=lhs.pi_minus.sup_diff(rhs.pi_minus),
        diff_tilde=lhs.pi_tilde.sup_diff(rhs.pi_tilde),
        diff_plus=lhs.pi_plus.sup_diff(rhs.pi_plus),
        winding_equal=(lhs.winding == rhs.winding),
    )
