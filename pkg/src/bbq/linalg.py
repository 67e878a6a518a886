"""Exact linear algebra over Q(q) and Q.

Forward elimination is fraction-free on denominator-cleared polynomial rows
with content stripping; reduced echelon data is produced with exact RatFunc
division afterwards.  Also provides the valuation-aware elimination used to
put lattice bases over the local ring of functions regular at q=1 into a
shape whose specialization keeps full rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .scalars import (
    LP_ONE,
    LaurentPoly,
    QM1,
    RF_ONE,
    RF_ZERO,
    RatFunc,
    limit_at_one,
    order_at_one,
    rf,
)


def _row_to_polys(row):
    """Clear denominators and strip integer/q-power content from a RatFunc row."""
    den = LP_ONE
    for x in row:
        if not x.is_zero() and not x.den.is_one():
            # lcm via den * (x.den / gcd); keep it simple with plain product
            den = den * x.den
    prow = []
    for x in row:
        if x.is_zero():
            prow.append(None)
        elif den.is_one():
            prow.append(x.num)
        else:
            prow.append((rf(x.num * den) / rf(x.den)).num)
    return _strip_content(prow)


def _strip_content(prow):
    """Divide a LaurentPoly row by its integer content and q-power valuation."""
    num_gcd = 0
    den_lcm = 1
    val = None
    for p in prow:
        if p is None:
            continue
        for e, c in p.coeffs.items():
            f = Fraction(c)
            num_gcd = _int_gcd(num_gcd, abs(f.numerator))
            den_lcm = den_lcm * f.denominator // _int_gcd(den_lcm, f.denominator)
        v = p.valuation()
        val = v if val is None else min(val, v)
    if val is None:
        return prow
    scale = Fraction(den_lcm, num_gcd)
    if scale == 1 and val == 0:
        return prow
    return [None if p is None else p.shift(-val).scale(scale) for p in prow]


def echelon(rows):
    """Bareiss fraction-free row echelon form.

    Takes RatFunc rows; returns (poly_rows, pivot_cols) where poly_rows are
    LaurentPoly rows in echelon shape.  Each update divides exactly by the
    previous pivot, so entries stay minor-sized.  Column order is respected,
    so pivot columns are deterministic.
    """
    from .scalars import _poly_divexact

    work = [_row_to_polys(r) for r in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    pivots = []
    prow = 0
    prev = None
    for col in range(ncols):
        sel = None
        for r in range(prow, m):
            if work[r][col] is not None:
                # prefer the sparsest pivot row for fill-in control
                if sel is None or _row_weight(work[r]) < _row_weight(work[sel]):
                    sel = r
        if sel is None:
            continue
        work[prow], work[sel] = work[sel], work[prow]
        piv = work[prow][col]
        for r in range(prow + 1, m):
            x = work[r][col]
            new = []
            for c in range(ncols):
                a = work[r][c]
                b = work[prow][c]
                term1 = piv * a if a is not None else None
                if x is None or b is None:
                    v = term1
                elif term1 is None:
                    v = -(x * b)
                else:
                    v = term1 - x * b
                    if v.is_zero():
                        v = None
                if v is not None and prev is not None:
                    v = _poly_divexact(v, prev)
                new.append(v)
            work[r] = new
        pivots.append(col)
        prow += 1
        prev = piv
        if prow == m:
            break
    return work[:prow], pivots


def _row_weight(prow):
    return sum(len(p.coeffs) for p in prow if p is not None)


def rank(rows) -> int:
    if not rows:
        return 0
    _, pivots = echelon(rows)
    return len(pivots)


def rref(rows):
    """Reduced row echelon form over Q(q): unit pivots, zeros above them.

    Returns (rref_rows as RatFunc, pivot_cols).
    """
    ech, pivots = echelon(rows)
    if not ech:
        return [], []
    ncols = len(ech[0])
    rr = [[RF_ZERO if p is None else rf(p) for p in row] for row in ech]
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        inv = rr[k][col].inverse()
        rr[k] = [x * inv for x in rr[k]]
        for j in range(k):
            factor = rr[j][col]
            if factor.is_zero():
                continue
            rr[j] = [a - factor * b for a, b in zip(rr[j], rr[k])]
    return rr, pivots


def kernel(rows, ncols):
    """Basis of the right kernel, one vector per free column, deterministic."""
    rr, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [RF_ZERO] * ncols
        vec[free] = RF_ONE
        for k, col in enumerate(pivots):
            vec[col] = -rr[k][free]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """First-pivot particular solution of A x = rhs (free variables zero).

    Returns the solution vector, or None when the system is inconsistent.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rr, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [RF_ZERO] * ncols
    for k, col in enumerate(pivots):
        x[col] = rr[k][ncols]
    return x


def rank_fractions(rows) -> int:
    """Rank of a matrix of Fractions (plain Gaussian elimination over Q)."""
    work = [list(map(Fraction, r)) for r in rows]
    m = len(work)
    if m == 0:
        return 0
    ncols = len(work[0])
    rank_ = 0
    for col in range(ncols):
        sel = next((r for r in range(rank_, m) if work[r][col] != 0), None)
        if sel is None:
            continue
        work[rank_], work[sel] = work[sel], work[rank_]
        piv = work[rank_][col]
        for r in range(rank_ + 1, m):
            if work[r][col] != 0:
                f = work[r][col] / piv
                work[r] = [a - f * b for a, b in zip(work[r], work[rank_])]
        rank_ += 1
        if rank_ == m:
            break
    return rank_


def regular_basis_at_one(rows):
    """Eliminate with minimal-(q-1)-valuation pivots so that every returned
    basis row is regular at q=1 and their specializations stay independent.

    Returns (basis_rows, specialized_rows); len(basis_rows) is the rank over
    Q(q) and the specialized rows are independent over Q by construction.
    """
    work = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    basis = []
    spec = []
    while work:
        best = None
        for ri, row in enumerate(work):
            for ci, x in enumerate(row):
                if x.is_zero():
                    continue
                v = order_at_one(x)
                if best is None or v < best[0]:
                    best = (v, ri, ci)
        if best is None:
            break
        v, ri, ci = best
        row = work.pop(ri)
        if v:
            scale = QM1 ** (-v)
            row = [x * scale for x in row]
        inv = row[ci].inverse()      # unit at q=1 after the rescaling
        row = [x * inv for x in row]
        basis.append(row)
        spec.append([limit_at_one(x) for x in row])
        rest = []
        for other in work:
            x = other[ci]
            if not x.is_zero():
                other = [a - x * b for a, b in zip(other, row)]
            if any(not y.is_zero() for y in other):
                rest.append(other)
        work = rest
    return basis, spec
