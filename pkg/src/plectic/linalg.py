"""Exact rational linear algebra plus float-mode helpers.

Exact matrices are lists/tuples of rows holding int or Fraction entries.
Rank uses fraction-free (Bareiss) elimination on denominator-cleared rows;
RREF uses ordinary Gauss-Jordan so subspace representatives are canonical.
Float matrices go through numpy with the package rank tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .scalars import RANK_TOL, normalize


def _rows_copy(mat):
    return [list(row) for row in mat]


def clear_denominators(row):
    """Scale a rational row to integers (rank/kernels are scale-invariant)."""
    mult = lcm(*[x.denominator for x in row if isinstance(x, Fraction)]) if any(
        isinstance(x, Fraction) for x in row
    ) else 1
    if mult == 1:
        return [int(x) for x in row]
    return [int(x * mult) for x in row]


def rank_exact(mat) -> int:
    """Rank by fraction-free Gaussian elimination (Bareiss)."""
    rows = [clear_denominators(row) for row in mat]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pval = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            rval = rows[r][col]
            row_r = rows[r]
            row_p = rows[rank]
            for c in range(col, ncols):
                row_r[c] = (pval * row_r[c] - rval * row_p[c]) // prev
        prev = pval
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(mat):
    """Reduced row-echelon form over exact scalars.

    Returns (rows, pivots) with zero rows dropped; rows are tuples with
    leading entry 1, pivot columns cleared.  This is the canonical
    representative used for subspace equality.
    """
    rows = _rows_copy(mat)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pval = rows[r][col]
        if pval != 1:
            rows[r] = [normalize(Fraction(x) / pval) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [normalize(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in rows[:r]], pivots


def rref_float(mat, tol: float = RANK_TOL):
    """Float RREF with relative-tolerance pivoting."""
    a = np.array(mat, dtype=float)
    if a.size == 0:
        return [], []
    scale = max(np.abs(a).max(), 1.0)
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for col in range(ncols):
        piv = r + int(np.argmax(np.abs(a[r:, col]))) if r < nrows else None
        if piv is None or abs(a[piv, col]) <= tol * scale:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] / a[r, col]
        for i in range(nrows):
            if i != r:
                a[i] = a[i] - a[i, col] * a[r]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return [tuple(float(x) for x in row) for row in a[:r]], pivots


def rank_float(mat, tol: float = RANK_TOL) -> int:
    a = np.array(mat, dtype=float)
    if a.size == 0 or not np.any(a):
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(sv > tol * sv[0]))


def kernel_basis(mat, ncols: int):
    """Basis rows of {x : mat @ x = 0}, via RREF back-substitution."""
    if not mat:
        return [tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols)]
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = normalize(-rows[r][fc])
        basis.append(tuple(vec))
    return basis


def kernel_basis_float(mat, ncols: int, tol: float = RANK_TOL):
    if not mat:
        return [tuple(1.0 if j == i else 0.0 for j in range(ncols)) for i in range(ncols)]
    rows, pivots = rref_float(mat, tol)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0.0] * ncols
        vec[fc] = 1.0
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def solve_exact(mat, rhs):
    """Solve a square exact system; None when singular."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    rows, pivots = rref(aug)
    if n in pivots:  # pivot in the rhs column: inconsistent
        return None
    if len(pivots) < n:
        return None
    sol = [0] * n
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][n]
    return [normalize(x) for x in sol]


def inverse_exact(mat):
    """Inverse of a square exact matrix; None when singular."""
    n = len(mat)
    aug = [list(row) + [1 if j == i else 0 for j in range(n)] for i, row in enumerate(mat)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [tuple(rows[i][n:]) for i in range(n)]


def _det_bareiss_int(rows):
    n = len(rows)
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = None
        for r in range(col, n):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        pval = rows[col][col]
        for r in range(col + 1, n):
            rval = rows[r][col]
            for c in range(col, n):
                rows[r][c] = (pval * rows[r][c] - rval * rows[col][c]) // prev
        prev = pval
    return sign * rows[n - 1][n - 1]


def det_exact(mat):
    """Determinant, fraction-free (Bareiss) with per-row denominator clearing."""
    n = len(mat)
    if n == 0:
        return 1
    rows = []
    denom = 1
    for row in mat:
        cleared = clear_denominators(row)
        for orig, new in zip(row, cleared):
            if orig != 0:
                denom *= Fraction(new) / Fraction(orig)
                break
        rows.append(cleared)
    return normalize(Fraction(_det_bareiss_int(rows)) / denom)


def matvec(mat, vec):
    return tuple(normalize(sum(a * b for a, b in zip(row, vec))) for row in mat)


def matmul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(normalize(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a
    )


def transpose(mat):
    return tuple(zip(*mat))


def identity_matrix(n: int):
    return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
