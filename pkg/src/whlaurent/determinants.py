"""Determinants of identity-plus-perturbation windowed matrices.

The generic path is the Berkowitz division-free algorithm, valid over any
commutative coefficient ring (product rings have zero divisors, so
elimination is not).  Large windows with Laurent-polynomial entries are
handled by evaluation/interpolation (exact fields) or unit-circle
sampling (complex floats); product rings recurse componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Set, Tuple

from .rings import Ring, RingError
from .series import LaurentSeries, WindowError
from .matrices import WindowedMatrix

MAX_BERKOWITZ = 64


@dataclass
class DetValue:
    value: Any
    exact: bool
    tail: Optional[float] = None
    window_used: Optional[int] = None


# -- Berkowitz --------------------------------------------------------

def _berkowitz_charpoly(ring: Ring, a: List[List[Any]]) -> List[Any]:
    """Coefficients [c_0..c_n] of det(x*I - A) = sum c_i x^(n-i),
    computed without division."""
    n = len(a)
    coeffs = [ring.one]
    for r in range(1, n + 1):
        # principal r x r block, partitioned around its last row/column
        top = a[r - 1][r - 1]
        row = [a[r - 1][j] for j in range(r - 1)]
        col = [a[i][r - 1] for i in range(r - 1)]
        # Toeplitz column: [1, -top, -row*col, -row*A*col, ...]
        tvec = [ring.one, ring.neg(top)]
        if r >= 2:
            cur = col
            for _ in range(r - 1):
                s = ring.zero
                for x, y in zip(row, cur):
                    s = ring.add(s, ring.mul(x, y))
                tvec.append(ring.neg(s))
                nxt = []
                for i in range(r - 1):
                    acc = ring.zero
                    for j in range(r - 1):
                        acc = ring.add(acc, ring.mul(a[i][j], cur[j]))
                    nxt.append(acc)
                cur = nxt
        new = []
        for i in range(r + 1):
            acc = ring.zero
            for j in range(len(coeffs)):
                k = i - j
                if 0 <= k < len(tvec):
                    acc = ring.add(acc, ring.mul(tvec[k], coeffs[j]))
            new.append(acc)
        coeffs = new
    return coeffs


def det_berkowitz(ring: Ring, a: List[List[Any]]) -> Any:
    n = len(a)
    if n == 0:
        return ring.one
    cp = _berkowitz_charpoly(ring, a)
    d = cp[-1]  # det(x*I - A) at x=0 is (-1)^n det A
    if n % 2 == 1:
        d = ring.neg(d)
    return d


# -- fast dense paths for Laurent-polynomial entries ------------------

def _series_matrix_bounds(rows: List[List[LaurentSeries]]) -> Tuple[int, int]:
    lo, hi = 0, 0
    for row in rows:
        for e in row:
            if e.coeffs:
                s = e.support()
                lo = min(lo, s[0])
                hi = max(hi, s[-1])
    return lo, hi


def _det_gauss_field(div: Callable, zero: Any, rows: List[List[Any]]) -> Any:
    """Fraction-free-enough elimination over an exact field."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = None
    sign = 1
    for i in range(n):
        piv = None
        for r in range(i, n):
            if m[r][i] != zero:
                piv = r
                break
        if piv is None:
            return zero
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            sign = -sign
        p = m[i][i]
        det = p if det is None else det * p
        for r in range(i + 1, n):
            if m[r][i] == zero:
                continue
            f = div(m[r][i], p)
            for c in range(i, n):
                m[r][c] = m[r][c] - f * m[i][c]
    if sign < 0:
        det = -det
    return det if det is not None else zero


def _det_series_rational(ring_w: Ring, rows: List[List[LaurentSeries]]) -> LaurentSeries:
    """Evaluation/interpolation determinant over Q[w, w^-1]."""
    base = ring_w.base
    n = len(rows)
    lo, hi = _series_matrix_bounds(rows)
    # clear negative powers columnwise: det scales by w^(n*lo)
    shift = -lo if lo < 0 else 0
    deg_bound = n * (hi + shift)
    pts: List[Fraction] = []
    k = 1
    while len(pts) < deg_bound + 1:
        pts.append(Fraction(k))
        if len(pts) < deg_bound + 1:
            pts.append(Fraction(-k))
        k += 1
    vals = []
    for p in pts:
        num = [[e.shift(shift).evaluate(p) for e in row] for row in rows]
        vals.append(_det_gauss_field(base.div, base.zero, num))
    coeffs = _lagrange_coeffs(pts, vals)
    out = {i - n * shift: c for i, c in enumerate(coeffs) if c != 0}
    return LaurentSeries(base, out)


def _lagrange_coeffs(pts: Sequence[Fraction], vals: Sequence[Fraction]) -> List[Fraction]:
    """Coefficients of the interpolating polynomial (Newton form)."""
    n = len(pts)
    divided = list(vals)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (pts[i] - pts[i - j])
    coeffs = [Fraction(0)] * n
    acc = [Fraction(0)] * n  # running product poly, starts as 1
    acc[0] = Fraction(1)
    deg = 0
    for j in range(n):
        for i in range(deg + 1):
            coeffs[i] += divided[j] * acc[i]
        # acc *= (x - pts[j])
        if j < n - 1:
            new = [Fraction(0)] * n
            for i in range(deg + 1):
                new[i + 1] += acc[i]
                new[i] -= pts[j] * acc[i]
            acc = new
            deg += 1
    return coeffs


def _det_series_complex(ring_w: Ring, rows: List[List[LaurentSeries]]) -> LaurentSeries:
    """Unit-circle sampling determinant over C[w, w^-1]."""
    import numpy as np

    base = ring_w.base
    n = len(rows)
    lo, hi = _series_matrix_bounds(rows)
    span = n * max(hi, 0) - n * min(lo, 0) + 1
    nsamp = 1
    while nsamp < 2 * span:
        nsamp *= 2
    dets = np.empty(nsamp, dtype=complex)
    supports = [[(np.array(e.support()),
                  np.array([complex(c) for c in (e.coeffs[s] for s in e.support())]))
                 for e in row] for row in rows]
    for k in range(nsamp):
        wv = np.exp(2j * np.pi * k / nsamp)
        mat = np.empty((n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                exps, cs = supports[i][j]
                mat[i, j] = np.sum(cs * wv ** exps) if len(exps) else 0.0
        dets[k] = np.linalg.det(mat)
    fc = np.fft.fft(dets) / nsamp
    half = nsamp // 2
    coeffs = {}
    for m in range(nsamp):
        idx = m if m < half else m - nsamp
        coeffs[idx] = complex(fc[m])
    return LaurentSeries(base, coeffs)


def det_block(ring: Ring, rows: List[List[Any]]) -> Any:
    """Determinant of a dense block, dispatching on the entry ring."""
    n = len(rows)
    if n == 0:
        return ring.one
    if ring.split is not None:
        parts = []
        comp_rings = ring.components or ()
        split_rows = [[ring.split(e) for e in row] for row in rows]
        ncomp = len(split_rows[0][0])
        for i in range(ncomp):
            comp = [[split_rows[r][c][i] for c in range(n)] for r in range(n)]
            cring = _component_entry_ring(ring, i)
            parts.append(det_block(cring, comp))
        return ring.merge(parts)
    if ring.base is not None and isinstance(rows[0][0], LaurentSeries):
        if ring.base.name == "Q" and n > 6:
            return _det_series_rational(ring, rows)
        if ring.base.name == "C":
            return _det_series_complex(ring, rows)
    if n > MAX_BERKOWITZ:
        raise RingError("matrix size %d exceeds the determinant bound" % n)
    return det_berkowitz(ring, rows)


def _component_entry_ring(ring: Ring, i: int) -> Ring:
    from .series import laurent_ring

    if ring.base is not None:
        # series ring over a product base
        return laurent_ring(ring.components[i], ring.var or "w")
    return ring.components[i]


def det_finite(ring: Ring, rows: List[List[Any]]) -> Any:
    """Division-free determinant over any commutative ring."""
    for row in rows:
        if len(row) != len(rows):
            raise ValueError("matrix is not square")
    if len(rows) > MAX_BERKOWITZ:
        raise RingError("matrix size exceeds the configured bound")
    if ring.split is not None:
        return det_block(ring, rows)
    return det_berkowitz(ring, rows)


# -- identity + perturbation ------------------------------------------

def _support_block(a: WindowedMatrix, axis: str) -> List[int]:
    rows = sorted({r for (r, _c) in a.entries})
    cols = sorted({c for (_r, c) in a.entries})
    if axis == "rows":
        return rows
    if axis == "cols":
        return cols
    if axis == "auto":
        if not a.entries:
            return []
        return rows if len(rows) <= len(cols) else cols
    raise ValueError("axis must be 'rows', 'cols' or 'auto'")


def det_identity_plus(a: WindowedMatrix, axis: str = "auto") -> DetValue:
    """det(1 + A) for a perturbation with finite row or column support.

    If the nonzero entries occupy finitely many rows (resp. columns), the
    infinite determinant equals the determinant of the principal block on
    those rows (resp. columns); the rest of the matrix is identity there.
    """
    idx = _support_block(a, axis)
    if not idx:
        return DetValue(a.ring.one, exact=True)
    lo, hi = a.reliable
    if idx[0] <= lo or idx[-1] >= hi:
        raise WindowError("perturbation support touches the reliable boundary")
    ring = a.ring
    rows = [[ring.add(ring.one, a.get(r, c)) if r == c else a.get(r, c)
             for c in idx] for r in idx]
    return DetValue(det_block(ring, rows), exact=True)


# -- the widetilde-determinant via column reduction -------------------

def _f_inv_entry(variant: str, ring_w: Ring, w: Any, k: int, m: int) -> Optional[Any]:
    """Entry (k, m) of F^{R+-}(1, w)^-1 from the path-counting expansion;
    None where it equals the plain identity entry."""
    if variant == "+":
        if k <= m <= 0:
            return _pow_cached(ring_w, w, m - k)
    elif variant == "-":
        # F^{R-}(1,w) = 1 - w^-1 1_{Z^+} U(z), so the wedge carries w^-(k-m)
        if k >= m >= 0:
            return ring_w.inverse(_pow_cached(ring_w, w, k - m))
    else:
        raise ValueError("variant must be '+' or '-'")
    return None


def _pow_cached(ring: Ring, w: Any, k: int) -> Any:
    out = ring.one
    for _ in range(k):
        out = ring.mul(out, w)
    return out


def det_tilde_column_reduced(variant: str, a: WindowedMatrix, w: Any) -> DetValue:
    """widetilde-det(F^{RX}(1,w) + A) with A of finite column support.

    Forms C = A * F^-1 using the closed-form column action of the
    (globally illegal) t=1 inverse; C keeps finite column support J' and
    the determinant reduces to the finite block (1 + C)[J', J'].
    """
    ring = a.ring
    cols = sorted({c for (_r, c) in a.entries})
    if not cols:
        return DetValue(ring.one, exact=True)
    lo, hi = a.reliable
    if cols[0] <= lo or cols[-1] >= hi:
        raise WindowError("perturbation columns touch the reliable boundary")
    jset = set(cols)
    if variant == "+":
        neg = [c for c in cols if c <= 0]
        if neg:
            jset |= set(range(min(neg), 1))
    else:
        pos = [c for c in cols if c >= 0]
        if pos:
            jset |= set(range(0, max(pos) + 1))
    jp = sorted(jset)
    if jp[0] <= lo or jp[-1] >= hi:
        raise WindowError("reduced column set exits the reliable window")
    rows_a: Dict[int, Dict[int, Any]] = {}
    for (r, k), v in a.entries.items():
        rows_a.setdefault(r, {})[k] = v
    block = []
    for r in jp:
        arow = rows_a.get(r, {})
        out_row = []
        for m in jp:
            acc = ring.one if r == m else ring.zero
            for k, v in arow.items():
                fe = _f_inv_entry(variant, ring, w, k, m)
                if fe is None:
                    if k == m:
                        acc = ring.add(acc, v)
                else:
                    acc = ring.add(acc, ring.mul(v, fe))
            out_row.append(acc)
        block.append(out_row)
    return DetValue(det_block(ring, block), exact=True)


# -- truncated determinants on nested windows -------------------------

def det_truncated(entry_fn: Callable[[int, int], Any], ring: Ring,
                  windows: Sequence[int],
                  lattice_half: bool = True) -> DetValue:
    """Determinant of an identity-plus-decay matrix on nested windows.

    ``entry_fn(n, m)`` returns the (n, m) entry (half-integer indices are
    passed in integer representation).  The tail estimate is the seminorm
    of the difference between the last two window values; it must not
    increase along the sequence.
    """
    if len(windows) < 2:
        raise ValueError("need at least two nested windows")
    vals = []
    for wsize in windows:
        lo, hi = (-wsize, wsize - 1) if lattice_half else (-wsize, wsize)
        idx = list(range(lo, hi + 1))
        rows = [[entry_fn(n, m) for m in idx] for n in idx]
        vals.append(det_block(ring, rows))
    tails = [ring.seminorm(ring.sub(vals[i + 1], vals[i])) for i in range(len(vals) - 1)]
    slack = 1e-12 if not ring.is_exact else 0.0
    for i in range(1, len(tails)):
        if tails[i] > tails[i - 1] + slack and tails[i] > ring.tolerance:
            raise WindowError("tail estimate is not decreasing; window too small")
    return DetValue(vals[-1], exact=False, tail=tails[-1], window_used=windows[-1])
