"""Pure-Python integer elimination core.

All row operations are exact: eliminations cross-multiply rows and strip the
row gcd afterwards, so entries stay modest at the matrix sizes this package
works with.  The compiled extension ``gmatrices._speedups`` implements the
same two functions with identical output; ``gmatrices.kernel`` picks one at
import time.
"""

from math import gcd

IMPLEMENTATION = "pure"


def rref_int(rows):
    """Reduce integer rows in place to primitive reduced row echelon form.

    ``rows`` is a list of equal-length lists of ints and is consumed.
    Returns ``(echelon, pivots)`` where ``echelon[k]`` is the k-th nonzero
    row, primitive (content 1) with a positive entry at column ``pivots[k]``,
    and every other returned row vanishes at that column.  Pivoting is
    deterministic: columns left to right, topmost usable row first.
    """
    nrows = len(rows)
    if nrows == 0:
        return [], []
    ncols = len(rows[0])
    pivots = []
    top = 0
    for col in range(ncols):
        pr = -1
        for i in range(top, nrows):
            if rows[i][col]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != top:
            rows[top], rows[pr] = rows[pr], rows[top]
        piv_row = rows[top]
        piv = piv_row[col]
        for i in range(nrows):
            if i == top:
                continue
            v = rows[i][col]
            if not v:
                continue
            row = rows[i]
            g = gcd(piv, v)
            a = piv // g
            b = v // g
            new = [a * x - b * y for x, y in zip(row, piv_row)]
            g2 = 0
            for x in new:
                if x:
                    g2 = gcd(g2, x)
                    if g2 == 1:
                        break
            if g2 > 1:
                new = [x // g2 for x in new]
            rows[i] = new
        pivots.append(col)
        top += 1
        if top == nrows:
            break
    out = []
    for k in range(top):
        row = rows[k]
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            row = [x // g for x in row]
        if row[pivots[k]] < 0:
            row = [-x for x in row]
        out.append(row)
    return out, pivots


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss, consumes input)."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]
