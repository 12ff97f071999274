"""Pure-Python row reduction kernels.

Both kernels return ``(rows, pivots)`` where ``rows`` are the nonzero rows of
the reduced row echelon form and ``pivots`` the pivot column of each row.
The input is not modified.  ``_rref.pyx`` mirrors these functions exactly.
"""
from fractions import Fraction
from math import gcd


def _exact_div(x, d):
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


def _integral_row(r):
    """Scale a row of ints/Fractions to a primitive integer row (same row space)."""
    row = list(r)
    if any(type(x) is not int for x in row):
        den = 1
        for x in row:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
        row = [int(Fraction(x) * den) for x in row]
    g = gcd(*row) if row else 0
    if g > 1:
        row = [x // g for x in row]
    return row


def rref_rational(rows, ncols):
    """Fraction-free Gauss-Jordan: rows stay primitive integer vectors and are
    divided by their pivot only at the end, which yields the unique RREF."""
    m = [_integral_row(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = r
        while pr < nrows and m[pr][c] == 0:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        prow = m[r]
        a = prow[c]
        nz = [k for k in range(c, ncols) if prow[k] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                continue
            g = gcd(a, f)
            ag, fg = a // g, f // g
            if ag != 1:
                for k in range(ncols):
                    if row[k] != 0:
                        row[k] *= ag
            for k in nz:
                row[k] -= fg * prow[k]
            d = gcd(*row)
            if d > 1:
                for k in range(ncols):
                    if row[k] != 0:
                        row[k] //= d
        pivots.append(c)
        r += 1
    out = []
    for i in range(r):
        piv = m[i][pivots[i]]
        out.append([_exact_div(x, piv) if x != 0 else 0 for x in m[i]])
    return out, pivots


def rref_modp(rows, ncols, p):
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = r
        while pr < nrows and m[pr][c] == 0:
            pr += 1
        if pr == nrows:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        prow = m[r]
        piv = prow[c]
        nz = [k for k in range(c, ncols) if prow[k] != 0]
        if piv != 1:
            inv = pow(piv, p - 2, p)
            for k in nz:
                prow[k] = prow[k] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                continue
            for k in nz:
                row[k] = (row[k] - f * prow[k]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots
