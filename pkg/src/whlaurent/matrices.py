"""Finite windows of the infinite structured matrices.

Indices live on the integer lattice or the half-integer lattice; a
half-integer index ``k + 1/2`` is stored as the integer ``k``.  A
:class:`WindowedMatrix` keeps a sparse entry map on a square window, a
band bound (entries vanish beyond it off the diagonal, on and off the
window), and a reliable sub-window on which entries agree with the
infinite object they model.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Set, Tuple

from .rings import Ring, RingError
from .series import LaurentSeries, WindowError


class Lattice(enum.Enum):
    INTEGER = "integer"
    HALF = "half"


def is_positive(lattice: Lattice, k: int) -> bool:
    return k > 0 if lattice is Lattice.INTEGER else k >= 0


def is_negative(lattice: Lattice, k: int) -> bool:
    return k < 0


def index_label(lattice: Lattice, k: int) -> str:
    return str(k) if lattice is Lattice.INTEGER else ("%d/2" % (2 * k + 1))


@dataclass
class WindowedMatrix:
    ring: Ring
    lattice: Lattice
    window: Tuple[int, int]
    entries: Dict[Tuple[int, int], Any]
    band: int
    reliable: Tuple[int, int]

    def get(self, r: int, c: int) -> Any:
        return self.entries.get((r, c), self.ring.zero)

    def indices(self) -> range:
        return range(self.window[0], self.window[1] + 1)

    def _prune(self) -> "WindowedMatrix":
        self.entries = {k: v for k, v in self.entries.items() if not self.ring.is_zero(v)}
        return self

    def check_compatible(self, other: "WindowedMatrix") -> None:
        if self.lattice is not other.lattice:
            raise RingError("lattice mismatch")
        if self.ring.name != other.ring.name:
            raise RingError("entry ring mismatch")

    def dense(self, lo: int, hi: int) -> List[List[Any]]:
        """Dense block on rows/cols [lo, hi] (must lie in the window)."""
        if lo < self.window[0] or hi > self.window[1]:
            raise WindowError("dense block exceeds the matrix window")
        return [[self.get(r, c) for c in range(lo, hi + 1)] for r in range(lo, hi + 1)]

    def dump(self) -> str:
        """Row-major text with separator lines around the 0th row/column
        (integer lattice) or between the -1/2 and 1/2 rows/columns."""
        lo, hi = self.window
        idxs = list(range(lo, hi + 1))
        cells = [[self.ring.fmt(self.get(r, c)) for c in idxs] for r in idxs]
        labels = [index_label(self.lattice, k) for k in idxs]
        widths = [max(len(cells[r][j]) for r in range(len(idxs))) for j in range(len(idxs))]
        widths = [max(w, 1) for w in widths]
        lab_w = max(len(s) for s in labels)

        def colsep_after(j: int) -> bool:
            k = idxs[j]
            if self.lattice is Lattice.INTEGER:
                return k == -1 or k == 0
            return k == -1

        def rowsep_after(i: int) -> bool:
            return colsep_after(i)

        lines = []
        total = None
        for i, r in enumerate(idxs):
            parts = []
            for j in range(len(idxs)):
                parts.append(cells[i][j].rjust(widths[j]))
                if colsep_after(j):
                    parts.append("|")
            line = labels[i].rjust(lab_w) + " [ " + " ".join(parts) + " ]"
            if total is None:
                total = len(line)
            lines.append(line)
            if rowsep_after(i):
                lines.append("-" * total)
        return "\n".join(lines)


# -- constructors -----------------------------------------------------

def identity(ring: Ring, lattice: Lattice, window: Tuple[int, int]) -> WindowedMatrix:
    ents = {(k, k): ring.one for k in range(window[0], window[1] + 1)}
    return WindowedMatrix(ring, lattice, window, ents, 0, window)


def project(ring: Ring, lattice: Lattice, window: Tuple[int, int],
            sign: str) -> WindowedMatrix:
    """Diagonal indicator 1_S for sign sets '-' , '+' , '0'."""
    ents = {}
    for k in range(window[0], window[1] + 1):
        keep = ((sign == "-" and is_negative(lattice, k))
                or (sign == "+" and is_positive(lattice, k))
                or (sign == "0" and lattice is Lattice.INTEGER and k == 0))
        if keep:
            ents[(k, k)] = ring.one
    return WindowedMatrix(ring, lattice, window, ents, 0, window)


def build_U(a: LaurentSeries, lattice: Lattice, window: Tuple[int, int],
            entry_ring: Optional[Ring] = None,
            embed: Optional[Callable[[Any], Any]] = None) -> WindowedMatrix:
    """Multiplication representation matrix: entry (n, m) = a_{n-m}."""
    ring = entry_ring or a.ring
    embed = embed or (lambda c: c)
    lo, hi = window
    ents = {}
    band = 0
    for d, c in a.coeffs.items():
        band = max(band, abs(d))
        ec = embed(c)
        for m in range(lo, hi + 1):
            n = m + d
            if lo <= n <= hi:
                ents[(n, m)] = ec
    return WindowedMatrix(ring, lattice, window, ents, band, window)._prune()


def build_F(variant: str, ring_w: Ring, t: Any, w: Any,
            window: Tuple[int, int]) -> WindowedMatrix:
    """F-family matrices on the integer lattice.

    variant 'R+': 1 - t*w*1_{Z^-}U(z^-1); 'R-': 1 - t*w^-1*1_{Z^+}U(z);
    'R': their (commuting) product, which carries both bands.
    """
    if variant not in ("R", "R+", "R-"):
        raise ValueError("variant must be 'R', 'R+' or 'R-'")
    lo, hi = window
    ents = {(k, k): ring_w.one for k in range(lo, hi + 1)}
    if variant in ("R", "R+"):
        coef = ring_w.neg(ring_w.mul(t, w))
        for n in range(lo, min(hi, -1) + 1):
            if n + 1 <= hi:
                ents[(n, n + 1)] = coef
    if variant in ("R", "R-"):
        coef = ring_w.neg(ring_w.mul(t, ring_w.inverse(w)))
        for n in range(max(lo, 1), hi + 1):
            if n - 1 >= lo:
                ents[(n, n - 1)] = coef
    return WindowedMatrix(ring_w, Lattice.INTEGER, window, ents, 1, window)._prune()


def build_Utilde(a: LaurentSeries, ring_w: Ring, w: Any,
                 embed: Callable[[Any], Any],
                 window: Tuple[int, int]) -> WindowedMatrix:
    """The doubled multiplication matrix with -w / -w^-1 coupling blocks
    and an isolated 1 at the center."""
    lo, hi = window
    w_inv = ring_w.inverse(w)
    neg_w = ring_w.neg(w)
    neg_w_inv = ring_w.neg(w_inv)
    ents = {(0, 0): ring_w.one}
    band = 0
    for d, c in a.coeffs.items():
        band = max(band, abs(d))
        ec = embed(c)
        for m in range(lo, hi + 1):
            n = m + d
            if not (lo <= n <= hi) or n == 0 or m == 0:
                continue
            if n < 0 and m < 0 or n > 0 and m > 0:
                ents[(n, m)] = ec
            elif n < 0 and m > 0:
                ents[(n, m)] = ring_w.mul(neg_w, ec)
            else:
                ents[(n, m)] = ring_w.mul(neg_w_inv, ec)
    return WindowedMatrix(ring_w, Lattice.INTEGER, window, ents, band, window)._prune()


# -- conjugated shift matrices (closed forms) -------------------------

def _pow(ring: Ring, x: Any, k: int) -> Any:
    out = ring.one
    for _ in range(k):
        out = ring.mul(out, x)
    return out


def ur_monomial(variant: str, n: int, ring_w: Ring, t: Any, w: Any,
                window: Tuple[int, int]) -> WindowedMatrix:
    """Closed form of the conjugation F^X(t,w) U(z^n) F^X(t,w)^-1.

    These are finite perturbations of the shift U(z^n); substituting t=1
    is legal here even though F^X(1,w) is not invertible.
    """
    if variant not in ("R", "+", "-"):
        raise ValueError("variant must be 'R', '+' or '-'")
    lo, hi = window
    ring = ring_w
    tw = ring.mul(t, w)
    tw_inv = ring.mul(t, ring.inverse(w))
    one_minus_t2 = ring.sub(ring.one, ring.mul(t, t))
    ents: Dict[Tuple[int, int], Any] = {}

    def put(r: int, c: int, v: Any) -> None:
        if lo <= r <= hi and lo <= c <= hi and not ring.is_zero(v):
            ents[(r, c)] = v

    def shift_rows(skip) -> None:
        for i in range(lo, hi + 1):
            if not skip(i):
                put(i, i - n, ring.one)

    if n == 0:
        for i in range(lo, hi + 1):
            put(i, i, ring.one)
        return WindowedMatrix(ring, Lattice.INTEGER, window, ents, 1, window)

    m = abs(n)
    if variant == "+":
        if n > 0:
            shift_rows(lambda i: False)
            for i in range(0, n + 1):
                for j in range(i - n + 1, 1):
                    put(i, j, _pow(ring, tw, j - i + n))
        else:
            shift_rows(lambda i: False)
            for i in range(-m, 0):
                put(i, i + m + 1, ring.neg(tw))
    elif variant == "-":
        if n > 0:
            shift_rows(lambda i: False)
            for i in range(1, n + 1):
                put(i, i - n - 1, ring.neg(tw_inv))
        else:
            shift_rows(lambda i: False)
            for i in range(-m + 1, 1):
                for j in range(0, i + m):
                    put(i, j, _pow(ring, tw_inv, (i + m) - j))
    else:  # 'R'
        if n > 0:
            shift_rows(lambda i: 1 <= i <= n)
            for j in range(-n + 1, 1):
                put(0, j, _pow(ring, tw, j + n))
            for i in range(1, n + 1):
                put(i, i - n - 1, ring.neg(tw_inv))
                for j in range(i - n, 1):
                    put(i, j, ring.mul(_pow(ring, tw, j - i + n), one_minus_t2))
        else:
            shift_rows(lambda i: -m <= i <= -1)
            for j in range(0, m):
                put(0, j, _pow(ring, tw_inv, m - j))
            for i in range(-m, 0):
                put(i, i + m + 1, ring.neg(tw))
                for j in range(0, i + m + 1):
                    put(i, j, ring.mul(_pow(ring, tw_inv, (i + m) - j), one_minus_t2))
    return WindowedMatrix(ring, Lattice.INTEGER, window, ents, m + 1, window)._prune()


def conjugate_UR(a: LaurentSeries, variant: str, ring_w: Ring, t: Any, w: Any,
                 embed: Callable[[Any], Any],
                 window: Tuple[int, int]) -> WindowedMatrix:
    """U^X(a, t, w) built by linearity from the per-monomial closed forms."""
    if a.is_zero():
        return WindowedMatrix(ring_w, Lattice.INTEGER, window, {}, 0, window)
    supp = a.support()
    if max(abs(s) for s in supp) + 1 > window[1] - window[0]:
        raise WindowError("window too small for the band of the symbol")
    out: Optional[WindowedMatrix] = None
    for d in supp:
        part = ur_monomial(variant, d, ring_w, t, w, window)
        scaled = scale(part, embed(a.coeffs[d]))
        out = scaled if out is None else mat_add(out, scaled)
    return out


# -- arithmetic -------------------------------------------------------

def _shrink(w: Tuple[int, int], k: int) -> Tuple[int, int]:
    return (w[0] + k, w[1] - k)


def mat_add(x: WindowedMatrix, y: WindowedMatrix) -> WindowedMatrix:
    x.check_compatible(y)
    if x.window != y.window:
        raise WindowError("window mismatch in matrix addition")
    ents = dict(x.entries)
    for k, v in y.entries.items():
        ents[k] = x.ring.add(ents.get(k, x.ring.zero), v)
    rel = (max(x.reliable[0], y.reliable[0]), min(x.reliable[1], y.reliable[1]))
    return WindowedMatrix(x.ring, x.lattice, x.window, ents,
                          max(x.band, y.band), rel)._prune()


def mat_sub(x: WindowedMatrix, y: WindowedMatrix) -> WindowedMatrix:
    return mat_add(x, scale(y, y.ring.neg(y.ring.one)))


def scale(x: WindowedMatrix, c: Any) -> WindowedMatrix:
    ents = {k: x.ring.mul(c, v) for k, v in x.entries.items()}
    return WindowedMatrix(x.ring, x.lattice, x.window, ents, x.band, x.reliable)._prune()


def mat_mul(x: WindowedMatrix, y: WindowedMatrix) -> WindowedMatrix:
    x.check_compatible(y)
    if x.window != y.window:
        raise WindowError("window mismatch in matrix product")
    ring = x.ring
    rows_y: Dict[int, List[Tuple[int, Any]]] = {}
    for (k, c), v in y.entries.items():
        rows_y.setdefault(k, []).append((c, v))
    ents: Dict[Tuple[int, int], Any] = {}
    for (r, k), v in x.entries.items():
        for c, u in rows_y.get(k, ()):
            key = (r, c)
            prod = ring.mul(v, u)
            prev = ents.get(key)
            ents[key] = prod if prev is None else ring.add(prev, prod)
    # an out-of-window index k in the sum must satisfy both band bounds,
    # so the factor with the smaller true band pins k inside the window
    rel = _shrink((max(x.reliable[0], y.reliable[0]), min(x.reliable[1], y.reliable[1])),
                  min(x.band, y.band))
    return WindowedMatrix(ring, x.lattice, x.window, ents,
                          x.band + y.band, rel)._prune()


def column_shift(x: WindowedMatrix, s: int) -> WindowedMatrix:
    """Right multiplication by U(z^-s): entry (n, m) <- (n, m - s)."""
    ents = {}
    lo, hi = x.window
    for (r, c), v in x.entries.items():
        if lo <= c + s <= hi:
            ents[(r, c + s)] = v
    return WindowedMatrix(x.ring, x.lattice, x.window, ents, x.band + abs(s),
                          _shrink(x.reliable, abs(s)))


def lift_entries(x: WindowedMatrix, ring: Ring, embed: Callable[[Any], Any]) -> WindowedMatrix:
    ents = {k: embed(v) for k, v in x.entries.items()}
    return WindowedMatrix(ring, x.lattice, x.window, ents, x.band, x.reliable)._prune()


# -- perturbation support ---------------------------------------------

def perturbation_columns(m: WindowedMatrix, reference: WindowedMatrix) -> Set[int]:
    """Columns on which the matrix differs from the reference.

    Errors out when a differing column touches the common reliable
    boundary, since the true support may then extend past the window.
    """
    diff = mat_sub(m, reference)
    rel = diff.reliable
    cols = set()
    for (r, c), v in diff.entries.items():
        if rel[0] <= c <= rel[1] and rel[0] <= r <= rel[1]:
            cols.add(c)
    if cols and (min(cols) == rel[0] or max(cols) == rel[1]):
        raise WindowError("perturbation columns touch the reliable boundary")
    return cols
