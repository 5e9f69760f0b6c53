"""Pure-Python reference implementations of the hot kernels.

The compiled twin lives in ``_fastops.pyx``; ``hochcalc.ops`` picks one at
import time.  Both must stay behaviourally identical (see
``tests/test_kernels.py``).
"""

BACKEND = "python"


def inversion_sign(perm, parities):
    """Koszul sign of a permutation of graded symbols.

    ``perm[i]`` is the input index of the symbol at output position ``i``;
    ``parities[j]`` is the parity (0 or 1) of input symbol ``j``.  The sign is
    the product of ``(-1)**(parities[a]*parities[b])`` over all inversions.
    """
    n = len(perm)
    if len(parities) != n:
        raise ValueError("permutation/parity length mismatch")
    exp = 0
    for i in range(n):
        pi = perm[i]
        qi = parities[pi]
        if qi:
            for j in range(i + 1, n):
                pj = perm[j]
                if pj < pi and parities[pj]:
                    exp ^= 1
    return -1 if exp else 1


def merge_terms(pairs):
    """Accumulate ``(key, coeff)`` pairs into a dict, dropping exact zeros."""
    out = {}
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
    if not factor:
        return dst
    for key, coeff in src.items():
        c = coeff * factor
        acc = dst.get(key)
        if acc is None:
            if c:
                dst[key] = c
        else:
            acc = acc + c
            if acc:
                dst[key] = acc
            else:
                del dst[key]
    return dst


def sort_sign(items, parities):
    """Stable-sort ``items`` tracking the Koszul sign of the permutation.

    Returns ``(sorted_items, sign)``; ``sign`` is 0 when two equal items of
    odd parity collide (graded-antisymmetric collapse).
    """
    n = len(items)
    order = sorted(range(n), key=lambda i: items[i])
    exp = 0
    for a in range(n):
        ia = order[a]
        if parities[ia]:
            for b in range(a + 1, n):
                ib = order[b]
                if ib < ia and parities[ib]:
                    exp ^= 1
    for a in range(n - 1):
        if items[order[a]] == items[order[a + 1]] and parities[order[a]] and parities[order[a + 1]]:
            return [items[i] for i in order], 0
    return [items[i] for i in order], (-1 if exp else 1)


def row_reduce(rows, ncols):
    """Exact Gauss-Jordan elimination on sparse rows (dicts col->coeff).

    Mutates nothing; returns ``(pivots, reduced)`` where ``pivots`` maps a
    pivot column to its (fully reduced) row index and ``reduced`` is the list
    of nonzero reduced rows in pivot order.
    """
    pivots = {}
    reduced = []
    for row in rows:
        row = dict(row)
        while row:
            col = min(c for c in row)
            hit = pivots.get(col)
            if hit is None:
                break
            lead = row[col]
            other = reduced[hit]
            for c, v in other.items():
                acc = row.get(c)
                nv = (acc if acc is not None else 0) - lead * v
                if nv:
                    row[c] = nv
                elif acc is not None:
                    del row[c]
        if not row:
            continue
        col = min(c for c in row)
        lead = row[col]
        if lead != 1:
            inv = _invert(lead)
            row = {c: v * inv for c, v in row.items()}
        for idx, other in enumerate(reduced):
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


def _invert(x):
    from fractions import Fraction

    return Fraction(1, 1) / x
