"""Wiener-Hopf (Birkhoff) factorization over commutative coefficient rings.

The three projections are computed from Toeplitz-determinant formulas:
the holomorphic and antiholomorphic parts as widetilde-determinants of
identity-minus-w-bracket matrices reduced to finite blocks, and the
orthogonal middle part either by exact division (default) or through the
half-lattice truncated determinant (cross-check route).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from .rings import Ring, RingError
from .series import (InvertiblePair, LaurentSeries, SeriesClass, WindowError,
                     classify, div_unit, laurent_ring)
from . import matrices as mx
from .matrices import Lattice, WindowedMatrix
from .determinants import DetValue, det_block, det_tilde_column_reduced, det_truncated


class FactorizationError(ValueError):
    """Raised when a factorization does not satisfy its contracts."""


@dataclass
class FactorizationResult:
    pi_minus: LaurentSeries
    pi_tilde: LaurentSeries
    pi_plus: LaurentSeries
    residual: float
    winding: Optional[int]

    def factors(self) -> Tuple[LaurentSeries, LaurentSeries, LaurentSeries]:
        return (self.pi_minus, self.pi_tilde, self.pi_plus)

    def reconstruct(self) -> LaurentSeries:
        return self.pi_minus.mul(self.pi_tilde).mul(self.pi_plus)


@dataclass
class OrthogonalDecomposition:
    """The idempotent family Pi_n = a_n b_{-n} of an orthogonal series."""

    ring: Ring
    idempotents: Dict[int, Any]
    unit: Any


# -- bracket perturbation matrices ------------------------------------

def _bracket_matrix(pair: InvertiblePair, sign: str,
                    window: Tuple[int, int]) -> WindowedMatrix:
    """U(b) 1_S U(a) - 1_S for S = Z^- ('-') or Z^+ ('+'), which equals
    U(b) [1_S, U(a)] and has finite column support for banded symbols."""
    a, b = pair.a, pair.b
    ring = a.ring
    lo, hi = window
    ents: Dict[Tuple[int, int], Any] = {}
    # B = 1_S U(a) - U(a) 1_S, entries (chi_S(n) - chi_S(m)) a_{n-m}
    bmat: Dict[Tuple[int, int], Any] = {}
    for d, c in a.coeffs.items():
        for m in range(lo, hi + 1):
            n = m + d
            if not (lo <= n <= hi):
                continue
            sn = (n < 0) if sign == "-" else (n > 0)
            sm = (m < 0) if sign == "-" else (m > 0)
            if sn == sm:
                continue
            bmat[(n, m)] = c if sn else ring.neg(c)
    brange = sorted({r for (r, _c) in bmat})
    need_lo = need_hi = None
    rows_b: Dict[int, List[Tuple[int, Any]]] = {}
    for (r, c), v in bmat.items():
        rows_b.setdefault(r, []).append((c, v))
    for n in range(lo, hi + 1):
        for j, entries in rows_b.items():
            coef = b.coeff(n - j)
            if b.window is not None and not (b.window[0] <= n - j <= b.window[1]):
                if need_lo is None or n - j < need_lo:
                    need_lo = n - j
                if need_hi is None or n - j > need_hi:
                    need_hi = n - j
                continue
            if ring.is_zero(coef):
                continue
            for c, v in entries:
                key = (n, c)
                prod = ring.mul(coef, v)
                prev = ents.get(key)
                ents[key] = prod if prev is None else ring.add(prev, prod)
    band = (max(abs(k) for k in a.coeffs) if a.coeffs else 0)
    out = WindowedMatrix(ring, Lattice.INTEGER, window, ents, band, window)
    out._prune()
    return out


def _needed_b_window(a: LaurentSeries, window: Tuple[int, int]) -> Tuple[int, int]:
    d = max((abs(k) for k in a.coeffs), default=0)
    return (-3 * d - 1, 3 * d + 1)


def _check_b_window(pair: InvertiblePair) -> None:
    a, b = pair.a, pair.b
    if b.window is None:
        return
    need = _needed_b_window(a, (0, 0))
    if b.window[0] > need[0] or b.window[1] < need[1]:
        raise WindowError(
            "inverse window [%d,%d] too small; need at least [%d,%d]"
            % (b.window[0], b.window[1], need[0], need[1]))


def _work_window(pair: InvertiblePair) -> Tuple[int, int]:
    a, b = pair.a, pair.b
    d = max((abs(k) for k in a.coeffs), default=0)
    if b.window is not None:
        r = max(abs(b.window[0]), abs(b.window[1])) + d + 2
    else:
        db = max((abs(k) for k in b.coeffs), default=0)
        r = d + db + 2
    return (-r, r)


def holomorphic_det_matrix(pair: InvertiblePair, ring_w: Ring, w: Any,
                           window: Optional[Tuple[int, int]] = None) -> WindowedMatrix:
    """A with 1 + A = 1 - w U(b) 1_{Z^-} U(a) U(z^-1), relative to F^{R+}(1,w):
    returns the perturbation A - (F^{R+}(1,w) - 1) ... i.e. the finite-column
    part  -w (U(b) 1_{Z^-} U(a) - 1_{Z^-}) U(z^-1)."""
    window = window or _work_window(pair)
    k = _bracket_matrix(pair, "-", window)
    shifted = mx.column_shift(k, 1)
    return mx.lift_entries(shifted, ring_w,
                           lambda c: ring_w.neg(ring_w.mul(w, ring_w.const(c))))


def antiholomorphic_det_matrix(pair: InvertiblePair, ring_w: Ring, w: Any,
                               window: Optional[Tuple[int, int]] = None) -> WindowedMatrix:
    """Finite-column part  -w^-1 (U(b) 1_{Z^+} U(a) - 1_{Z^+}) U(z)."""
    window = window or _work_window(pair)
    k = _bracket_matrix(pair, "+", window)
    shifted = mx.column_shift(k, -1)
    w_inv = ring_w.inverse(w)
    return mx.lift_entries(shifted, ring_w,
                           lambda c: ring_w.neg(ring_w.mul(w_inv, ring_w.const(c))))


# -- the projections --------------------------------------------------

def pi_plus(pair: InvertiblePair,
            window: Optional[Tuple[int, int]] = None) -> LaurentSeries:
    """Strictly holomorphic projection, as a series in w."""
    _check_b_window(pair)
    ring = pair.a.ring
    ring_w = laurent_ring(ring, "w")
    w = LaurentSeries.monomial(ring, 1)
    a_mat = holomorphic_det_matrix(pair, ring_w, w, window)
    det = det_tilde_column_reduced("+", a_mat, w)
    out: LaurentSeries = det.value
    _check_projection(out, "plus", ring)
    return out


def pi_minus(pair: InvertiblePair,
             window: Optional[Tuple[int, int]] = None) -> LaurentSeries:
    """Strictly antiholomorphic projection, as a series in w^-1."""
    _check_b_window(pair)
    ring = pair.a.ring
    ring_w = laurent_ring(ring, "w")
    w = LaurentSeries.monomial(ring, 1)
    a_mat = antiholomorphic_det_matrix(pair, ring_w, w, window)
    det = det_tilde_column_reduced("-", a_mat, w)
    out: LaurentSeries = det.value
    _check_projection(out, "minus", ring)
    return out


def _check_projection(p: LaurentSeries, kind: str, ring: Ring) -> None:
    if not ring.equals(p.coeff(0), ring.one):
        raise FactorizationError(
            "projection %s has non-unit constant term (inconsistent pair?)" % kind)
    bad = [n for n in p.support() if (n < 0 if kind == "plus" else n > 0)]
    if bad:
        raise FactorizationError("projection %s has stray exponents %r" % (kind, bad))


def pi_tilde_derived(pair: InvertiblePair, pi_m: LaurentSeries, pi_p: LaurentSeries,
                     window: Tuple[int, int]) -> LaurentSeries:
    """Orthogonal projection via a(w) * pi_minus(w)^-1 * pi_plus(w)^-1,
    computed by exact long division."""
    a_w = pair.a  # same coefficients read as a series in w
    q = div_unit(a_w, pi_p, window)
    q = div_unit(q, pi_m, window)
    return q


def pi_tilde_direct(pair: InvertiblePair,
                    windows: Sequence[int] = (16, 24, 32)) -> Tuple[LaurentSeries, float]:
    """Orthogonal projection via the half-lattice truncated determinant.

    Returns (series, tail estimate).  The w-independent normalization is
    fixed by the w = 1 specialization, where the product of the two outer
    projections equals a(1) divided by the middle one.
    """
    a, b = pair.a, pair.b
    ring = a.ring
    pp = pi_plus(pair)
    pm = pi_minus(pair)
    norm_inv = ring.mul(pp.evaluate(ring.one), pm.evaluate(ring.one))
    norm = ring.mul(a.evaluate(ring.one), ring.inverse(norm_inv))  # = pi_tilde(a, 1)
    ring_w = laurent_ring(ring, "w")
    w_pow = {0: ring_w.one,
             1: LaurentSeries.monomial(ring, 1),
             -1: LaurentSeries.monomial(ring, -1)}

    def entry(n: int, m: int) -> LaurentSeries:
        # (U_half(a) D_w U_half(b) D_w^-1)[n, m]; D_w = w 1_{S^-} + 1_{S^+}
        acc: Dict[int, Any] = {}
        e_m = 1 if m < 0 else 0
        for d, c in a.coeffs.items():
            k = n - d
            bc = b.coeff(k - m)
            if ring.is_zero(bc):
                continue
            e = (1 if k < 0 else 0) - e_m
            v = ring.mul(c, bc)
            acc[e] = ring.add(acc.get(e, ring.zero), v)
        return LaurentSeries(ring, acc)

    det = det_truncated(entry, ring_w, list(windows), lattice_half=True)
    series: LaurentSeries = det.value.scale(norm)
    return series, (det.tail if det.tail is not None else 0.0) * ring.seminorm(norm)


def winding_index(pi_tilde: LaurentSeries) -> Optional[int]:
    """Exponent of a monomial orthogonal part; None for decomposable rings."""
    supp = pi_tilde.support()
    if len(supp) != 1:
        return None
    try:
        pi_tilde.ring.inverse(pi_tilde.coeffs[supp[0]])
    except RingError:
        return None
    return supp[0]


def factorize(pair: InvertiblePair,
              window: Optional[Tuple[int, int]] = None) -> FactorizationResult:
    """Assemble the full decomposition a = pi_minus * pi_tilde * pi_plus."""
    ring = pair.a.ring
    pair_tol = 0.0 if ring.is_exact else ring.tolerance * 100
    if pair.residual > pair_tol:
        raise FactorizationError(
            "pair residual %.3g: the supplied series does not invert the symbol"
            % pair.residual)
    pp = pi_plus(pair)
    pm = pi_minus(pair)
    if window is None:
        s = pair.a._supp_bounds()
        r = max(abs(s[0]), abs(s[1]), 1) + 4
        window = (-r, r)
    pt = pi_tilde_derived(pair, pm, pp, window)
    recon = pm.mul(pt).mul(pp)
    residual = recon.sup_diff(pair.a.truncate(window))
    tol = 0.0 if ring.is_exact else ring.tolerance * 100
    if residual > tol:
        raise FactorizationError(
            "reconstruction residual %.3g exceeds tolerance (window insufficient?)"
            % residual)
    if SeriesClass.ORTHOGONAL not in classify(pt):
        raise FactorizationError("middle projection is not orthogonal")
    return FactorizationResult(pm, pt, pp, residual, winding_index(pt))


# -- orthogonal machinery ---------------------------------------------

def orthogonal_decompose(pair: InvertiblePair) -> OrthogonalDecomposition:
    """Idempotents Pi_n = a_n b_{-n} of an orthogonal invertible series."""
    a, b = pair.a, pair.b
    ring = a.ring
    if SeriesClass.ORTHOGONAL not in classify(a):
        raise FactorizationError("series is not orthogonal")
    idem: Dict[int, Any] = {}
    for n in a.support():
        p = ring.mul(a.coeffs[n], b.coeff(-n))
        if not ring.is_zero(p):
            idem[n] = p
    _validate_decomposition(ring, idem, pair)
    return OrthogonalDecomposition(ring, idem, a.evaluate(ring.one))


def _validate_decomposition(ring: Ring, idem: Dict[int, Any],
                            pair: Optional[InvertiblePair]) -> None:
    total = ring.zero
    for n, p in idem.items():
        if not ring.equals(ring.mul(p, p), p):
            raise FactorizationError("Pi_%d is not idempotent" % n)
        total = ring.add(total, p)
        for m, q in idem.items():
            if m != n and not ring.is_zero(ring.mul(p, q)):
                raise FactorizationError("Pi_%d Pi_%d != 0" % (n, m))
    if not ring.equals(total, ring.one):
        raise FactorizationError("idempotents do not sum to 1")
    if pair is not None:
        a, b = pair.a, pair.b
        for n in a.support():
            for m, q in idem.items():
                want = a.coeffs[n] if n == m else ring.zero
                if not ring.equals(ring.mul(a.coeffs[n], q), want):
                    raise FactorizationError("subordination fails at a_%d Pi_%d" % (n, m))


def orthonormal_split(d: OrthogonalDecomposition) -> Tuple[Any, LaurentSeries]:
    """Split an orthogonal series into its value at 1 and the orthonormal
    series of its idempotents."""
    normal = LaurentSeries(d.ring, dict(d.idempotents))
    return d.unit, normal


def product_of_orthogonals(d1: OrthogonalDecomposition,
                           d2: OrthogonalDecomposition) -> OrthogonalDecomposition:
    ring = d1.ring
    if ring.name != d2.ring.name:
        raise RingError("ring mismatch")
    idem: Dict[int, Any] = {}
    for n1, p1 in d1.idempotents.items():
        for n2, p2 in d2.idempotents.items():
            n = n1 + n2
            v = ring.mul(p1, p2)
            if not ring.is_zero(v):
                idem[n] = ring.add(idem.get(n, ring.zero), v)
    _validate_decomposition(ring, idem, None)
    return OrthogonalDecomposition(ring, idem, ring.mul(d1.unit, d2.unit))


def projection_matrix(d: OrthogonalDecomposition,
                      window: Tuple[int, int]) -> WindowedMatrix:
    """The half-lattice idempotent P = sum_n Pi_n 1_{S^- + n}: diagonal
    with entry sum_{n >= k+1} Pi_n at half-index k + 1/2."""
    ring = d.ring
    ents = {}
    exps = sorted(d.idempotents)
    for k in range(window[0], window[1] + 1):
        acc = ring.zero
        for n in exps:
            if n >= k + 1:
                acc = ring.add(acc, d.idempotents[n])
        if not ring.is_zero(acc):
            ents[(k, k)] = acc
    return WindowedMatrix(ring, Lattice.HALF, window, ents, 0, window)


def n_p_series(p: WindowedMatrix, windows: Sequence[int] = (8, 12, 16)) -> LaurentSeries:
    """Orthonormal series of a half-lattice idempotent close to 1_{S^-}:
    det((1 - P + z P)(1_{S^+} + z 1_{S^-})^-1) on nested windows."""
    ring = p.ring
    if p.lattice is not Lattice.HALF:
        raise RingError("P must live on the half-integer lattice")
    # idempotency check on the window
    lo, hi = p.reliable
    p2 = mx.mat_mul(p, p)
    for (r, c), v in p.entries.items():
        if p2.reliable[0] <= r <= p2.reliable[1] and p2.reliable[0] <= c <= p2.reliable[1]:
            if not ring.equals(p2.get(r, c), v):
                raise FactorizationError("P is not idempotent on the window")
    ring_z = laurent_ring(ring, "z")
    z = LaurentSeries.monomial(ring, 1)
    z_inv = LaurentSeries.monomial(ring, -1)

    def entry(n: int, m: int) -> LaurentSeries:
        if n == m and not (p.window[0] <= n <= p.window[1]):
            # beyond its window P agrees with 1_{S^-}
            base = ring.one if n < p.window[0] else ring.zero
        else:
            base = p.get(n, m)
        coeffs: Dict[int, Any] = {}
        shift = -1 if m < 0 else 0
        # (1 - P)[n,m] + z P[n,m], then column scaled by z^shift
        if n == m:
            coeffs[shift] = ring.sub(ring.one, base)
        elif not ring.is_zero(base):
            coeffs[shift] = ring.neg(base)
        if not ring.is_zero(base):
            coeffs[1 + shift] = ring.add(coeffs.get(1 + shift, ring.zero), base)
        return LaurentSeries(ring, coeffs)

    det = det_truncated(entry, ring_z, list(windows), lattice_half=True)
    out: LaurentSeries = det.value
    if SeriesClass.ORTHOGONAL not in classify(out) or \
            not ring.equals(out.evaluate(ring.one), ring.one):
        raise FactorizationError("determinant did not yield an orthonormal series")
    return out
