# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction kernels; same contract as ``_rref_py``."""
from fractions import Fraction

from libc.stdlib cimport malloc, free

from math import gcd

from tiltrep._rref_py import _integral_row
from tiltrep._rref_py import rref_modp as _rref_modp_py

cdef long long MAX_C_PRIME = 2147483647


cdef object _exact_div(object x, object d):
    if d == 1:
        return x
    if d == -1:
        return -x
    if type(x) is int and type(d) is int:
        q, r = divmod(x, d)
        if r == 0:
            return q
    v = Fraction(x) / d
    return v.numerator if v.denominator == 1 else v


def rref_rational(rows, Py_ssize_t ncols):
    cdef list m = [_integral_row(src) for src in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef list out = []
    cdef Py_ssize_t r = 0, c, pr, i, k, j, nnz
    cdef list prow, row, nz
    cdef object a, f, g, ag, fg, d, piv
    for c in range(ncols):
        if r == nrows:
            break
        pr = r
        while pr < nrows and (<list>m[pr])[c] == 0:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        prow = <list>m[r]
        a = prow[c]
        nz = [k for k in range(c, ncols) if prow[k] != 0]
        nnz = len(nz)
        for i in range(nrows):
            if i == r:
                continue
            row = <list>m[i]
            f = row[c]
            if f == 0:
                continue
            g = gcd(a, f)
            ag = a // g
            fg = f // g
            if ag != 1:
                for k in range(ncols):
                    if row[k] != 0:
                        row[k] = row[k] * ag
            for j in range(nnz):
                k = nz[j]
                row[k] = row[k] - fg * prow[k]
            d = gcd(*row)
            if d > 1:
                for k in range(ncols):
                    if row[k] != 0:
                        row[k] = row[k] // d
        pivots.append(c)
        r += 1
    for i in range(r):
        row = <list>m[i]
        piv = row[pivots[i]]
        out.append([_exact_div(x, piv) if x != 0 else 0 for x in row])
    return out, pivots


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_modp(rows, Py_ssize_t ncols, long long p):
    if p > MAX_C_PRIME:
        return _rref_modp_py(rows, ncols, p)
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, pr, i, k, j, nnz
    cdef long long piv, inv, f, tmp
    cdef long long *a
    cdef Py_ssize_t *nz
    cdef list pivots = []
    if nrows == 0 or ncols == 0:
        return [], pivots
    a = <long long *>malloc(nrows * ncols * sizeof(long long))
    nz = <Py_ssize_t *>malloc(ncols * sizeof(Py_ssize_t))
    if a == NULL or nz == NULL:
        free(a)
        free(nz)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for k in range(ncols):
                a[i * ncols + k] = row[k] % p
        for c in range(ncols):
            if r == nrows:
                break
            pr = r
            while pr < nrows and a[pr * ncols + c] == 0:
                pr += 1
            if pr == nrows:
                continue
            if pr != r:
                for k in range(ncols):
                    tmp = a[r * ncols + k]
                    a[r * ncols + k] = a[pr * ncols + k]
                    a[pr * ncols + k] = tmp
            piv = a[r * ncols + c]
            nnz = 0
            for k in range(c, ncols):
                if a[r * ncols + k] != 0:
                    nz[nnz] = k
                    nnz += 1
            if piv != 1:
                inv = _inv_mod(piv, p)
                for j in range(nnz):
                    k = nz[j]
                    a[r * ncols + k] = a[r * ncols + k] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                f = a[i * ncols + c]
                if f == 0:
                    continue
                for j in range(nnz):
                    k = nz[j]
                    tmp = (a[i * ncols + k] - f * a[r * ncols + k]) % p
                    if tmp < 0:
                        tmp += p
                    a[i * ncols + k] = tmp
            pivots.append(c)
            r += 1
        out = [[a[i * ncols + k] for k in range(ncols)] for i in range(r)]
    finally:
        free(a)
        free(nz)
    return out, pivots
