"""Exact linear algebra over the rationals and integer lattice normal forms.

Matrices are lists of row lists.  Everything runs on ``Fraction`` (or plain
``int`` for the lattice routines); sizes here are tiny (degree of a number
field, a handful of lattice columns), so classical Gaussian elimination and
column reduction are the right tools.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a]


def det(a) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        pv = m[col][col]
        result *= pv
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a):
    """Exact inverse, or None if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + identity(n)[i] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_columns(columns, target):
    """Rational x with sum_j x[j]*columns[j] = target, or None.

    The system may be tall (more equations than unknowns); consistency is
    checked exactly.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return x


def rank(a) -> int:
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    m = [[Fraction(x) for x in row] for row in a]
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        pv = m[rk][col]
        for r in range(rk + 1, nrows):
            if m[r][col]:
                f = m[r][col] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk


# ---------------------------------------------------------------------------
# Integer column lattices (Hermite normal form with transformation)

def column_hnf(columns):
    """Column-style HNF of an integer column list.

    Returns (h_columns, u, pivot_rows) with

        A * U = [H | 0]

    where A has the given columns, U is unimodular (returned as a list of
    its columns), H consists of the first len(pivot_rows) transformed
    columns, pivot_rows[k] is the row of the k-th pivot, each pivot is
    positive, and entries of earlier pivot columns are reduced modulo the
    pivot in its row.  Deterministic for fixed input.
    """
    ncols = len(columns)
    nrows = len(columns[0]) if columns else 0
    cols = [[int(x) for x in c] for c in columns]
    u = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]

    def colsub(dst, src, q):
        cols[dst] = [a - q * b for a, b in zip(cols[dst], cols[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    pivot_rows = []
    pcol = 0
    for row in range(nrows):
        live = [j for j in range(pcol, ncols) if cols[j][row] != 0]
        if not live:
            continue
        while True:
            live = [j for j in range(pcol, ncols) if cols[j][row] != 0]
            if len(live) == 1:
                break
            jmin = min(live, key=lambda j: abs(cols[j][row]))
            for j in live:
                if j != jmin:
                    colsub(j, jmin, cols[j][row] // cols[jmin][row])
        j0 = live[0]
        if j0 != pcol:
            cols[j0], cols[pcol] = cols[pcol], cols[j0]
            u[j0], u[pcol] = u[pcol], u[j0]
        if cols[pcol][row] < 0:
            cols[pcol] = [-x for x in cols[pcol]]
            u[pcol] = [-x for x in u[pcol]]
        pv = cols[pcol][row]
        for j in range(pcol):
            q = cols[j][row] // pv
            if q:
                colsub(j, pcol, q)
        pivot_rows.append(row)
        pcol += 1
        if pcol == ncols:
            break
    return cols[:pcol], u, pivot_rows


def lattice_solve(columns, target):
    """Integer x with sum x[j]*columns[j] = target, or None."""
    if not columns:
        return None
    h, u, pivot_rows = column_hnf(columns)
    ncols = len(columns)
    nrows = len(columns[0])
    y = [0] * ncols
    residual = [int(t) for t in target]
    for k, row in enumerate(pivot_rows):
        pv = h[k][row]
        if residual[row] % pv != 0:
            return None
        c = residual[row] // pv
        y[k] = c
        if c:
            residual = [a - c * b for a, b in zip(residual, h[k])]
    if any(residual):
        return None
    # x = U * y (U stored as columns)
    x = [0] * ncols
    for j in range(ncols):
        yj = y[j]
        if yj:
            for i in range(ncols):
                x[i] += u[j][i] * yj
    return x


def lattice_index_multiplier(columns, nrows: int):
    """Smallest N >= 1 with N*Z^nrows contained in the column lattice.

    None when the lattice has rank < nrows.
    """
    h, _, pivot_rows = column_hnf(columns)
    if len(pivot_rows) < nrows:
        return None
    hmat = [[Fraction(h[k][i]) for k in range(nrows)] for i in range(nrows)]
    hinv = inverse(hmat)
    n = 1
    for row in hinv:
        for x in row:
            n = lcm(n, x.denominator)
    return n


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g
