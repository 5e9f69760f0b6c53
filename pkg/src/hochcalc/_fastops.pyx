# cython: language_level=3
"""Compiled twin of ``_pyops``: hot kernels with C-level loop control.

Coefficients stay Python objects (exact ints / Fractions); the win comes from
removing interpreter overhead in the tight loops.
"""

BACKEND = "cython"


def inversion_sign(perm, parities):
    """Koszul sign of a permutation of graded symbols (see ``_pyops``)."""
    cdef Py_ssize_t n = len(perm)
    if len(parities) != n:
        raise ValueError("permutation/parity length mismatch")
    cdef int exp = 0
    cdef Py_ssize_t i, j, pi, pj
    cdef list pm = list(perm)
    cdef list pa = list(parities)
    for i in range(n):
        pi = pm[i]
        if pa[pi]:
            for j in range(i + 1, n):
                pj = pm[j]
                if pj < pi and pa[pj]:
                    exp ^= 1
    return -1 if exp else 1


def merge_terms(pairs):
    """Accumulate ``(key, coeff)`` pairs into a dict, dropping exact zeros."""
    cdef dict out = {}
    for key, coeff in pairs:
        acc = out.get(key)
        if acc is None:
            if coeff:
                out[key] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
    return out


def add_into(dst, src, factor):
    """In-place ``dst += factor * src`` for term dicts; returns ``dst``."""
    cdef dict d = dst
    if not factor:
        return d
    for key, coeff in (<dict> src).items():
        c = coeff * factor
        acc = d.get(key)
        if acc is None:
            if c:
                d[key] = c
        else:
            acc = acc + c
            if acc:
                d[key] = acc
            else:
                del d[key]
    return d


def sort_sign(items, parities):
    """Stable-sort with Koszul sign; 0 on odd-parity collision."""
    cdef Py_ssize_t n = len(items)
    cdef list order = sorted(range(n), key=lambda i: items[i])
    cdef int exp = 0
    cdef Py_ssize_t a, b, ia, ib
    cdef list pa = list(parities)
    for a in range(n):
        ia = order[a]
        if pa[ia]:
            for b in range(a + 1, n):
                ib = order[b]
                if ib < ia and pa[ib]:
                    exp ^= 1
    for a in range(n - 1):
        if items[order[a]] == items[order[a + 1]] and pa[order[a]] and pa[order[a + 1]]:
            return [items[i] for i in order], 0
    return [items[i] for i in order], (-1 if exp else 1)


def row_reduce(rows, ncols):
    """Exact Gauss-Jordan elimination on sparse rows (see ``_pyops``)."""
    from fractions import Fraction
    cdef dict pivots = {}
    cdef list reduced = []
    cdef dict row, other
    cdef Py_ssize_t idx
    for src in rows:
        row = dict(src)
        while row:
            col = min(row)
            hit = pivots.get(col)
            if hit is None:
                break
            lead = row[col]
            other = reduced[<Py_ssize_t> hit]
            for c, v in other.items():
                acc = row.get(c)
                nv = (acc if acc is not None else 0) - lead * v
                if nv:
                    row[c] = nv
                elif acc is not None:
                    del row[c]
        if not row:
            continue
        col = min(row)
        lead = row[col]
        if lead != 1:
            inv = Fraction(1, 1) / lead
            row = {c: v * inv for c, v in row.items()}
        for idx in range(len(reduced)):
            other = reduced[idx]
            coeff = other.get(col)
            if coeff:
                for c, v in row.items():
                    acc = other.get(c)
                    nv = (acc if acc is not None else 0) - coeff * v
                    if nv:
                        other[c] = nv
                    elif acc is not None:
                        del other[c]
        pivots[col] = len(reduced)
        reduced.append(row)
    return pivots, reduced
