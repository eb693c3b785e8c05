# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer elimination core.

Same algorithms and output as ``gmatrices._kernel_py``; entries stay Python
ints (arbitrary precision), the speedup comes from typed index loops.
"""

from math import gcd

IMPLEMENTATION = "compiled"


def rref_int(list rows):
    """See ``gmatrices._kernel_py.rref_int``; identical contract."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef Py_ssize_t ncols = len(<list>rows[0])
    cdef Py_ssize_t top = 0, col, i, pr, j, k
    cdef list pivots = []
    cdef list piv_row, row, new
    cdef object piv, v, g, a, b, g2, x
    for col in range(ncols):
        pr = -1
        for i in range(top, nrows):
            if (<list>rows[i])[col] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != top:
            rows[top], rows[pr] = rows[pr], rows[top]
        piv_row = <list>rows[top]
        piv = piv_row[col]
        for i in range(nrows):
            if i == top:
                continue
            row = <list>rows[i]
            v = row[col]
            if v == 0:
                continue
            g = gcd(piv, v)
            a = piv // g
            b = v // g
            new = [0] * ncols
            for j in range(ncols):
                new[j] = a * row[j] - b * piv_row[j]
            g2 = 0
            for j in range(ncols):
                x = new[j]
                if x != 0:
                    g2 = gcd(g2, x)
                    if g2 == 1:
                        break
            if g2 > 1:
                for j in range(ncols):
                    new[j] = new[j] // g2
            rows[i] = new
        pivots.append(col)
        top += 1
        if top == nrows:
            break
    cdef list out = []
    for k in range(top):
        row = <list>rows[k]
        g = 0
        for j in range(ncols):
            x = row[j]
            if x != 0:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            row = [x // g for x in row]
        if row[<Py_ssize_t>pivots[k]] < 0:
            row = [-x for x in row]
        out.append(row)
    return out, pivots


def det_int(list rows):
    """See ``gmatrices._kernel_py.det_int``; identical contract."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef Py_ssize_t k, i, j
    cdef int sign = 1
    cdef object prev = 1, pivot, head
    cdef list row_i, row_k
    for k in range(n - 1):
        if (<list>rows[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list>rows[i])[k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = <list>rows[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>rows[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    if sign > 0:
        return (<list>rows[n - 1])[n - 1]
    return -(<list>rows[n - 1])[n - 1]
