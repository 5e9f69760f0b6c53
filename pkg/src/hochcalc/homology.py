"""Exact linear algebra over Q and homology of finite complex windows.

Matrices are sparse row dicts; elimination is exact Gauss-Jordan over
``Fraction``.  The Hochschild window builders come in a normalized and an
un-normalized flavour so homology dimensions can be cross-checked against an
independent complex.
"""

import itertools

from .ops import merge_terms, row_reduce
from .chains import Chain, boundary_b, connes_B, monomial_degree, shifted


class ExactMatrix:
    """Sparse matrix: ``rows[i]`` maps column -> exact coefficient."""

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict(r) for r in rows] if rows else [dict() for _ in range(nrows)]

    def set(self, i, j, v):
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def rank(self):
        pivots, _ = row_reduce(self.rows, self.ncols)
        return len(pivots)

    def kernel_basis(self):
        """Basis of the null space (vectors over the column index set)."""
        pivots, reduced = row_reduce(self.rows, self.ncols)
        pivot_cols = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            vec = {free: 1}
            for col, idx in pivots.items():
                c = reduced[idx].get(free)
                if c:
                    vec[col] = -c
            basis.append(vec)
        return basis

    def solve(self, target):
        """One exact solution of ``M z = target`` or None."""
        aug_col = self.ncols
        rows = []
        for i, row in enumerate(self.rows):
            r = dict(row)
            t = target.get(i) if isinstance(target, dict) else target[i]
            if t:
                r[aug_col] = t
            rows.append(r)
        pivots, reduced = row_reduce(rows, self.ncols + 1)
        if aug_col in pivots:
            return None
        sol = {}
        for col, idx in pivots.items():
            c = reduced[idx].get(aug_col)
            if c:
                sol[col] = c
        return sol

    def apply(self, vec):
        """Matrix times a sparse column vector."""
        out = {}
        for i, row in enumerate(self.rows):
            acc = 0
            for j, c in row.items():
                v = vec.get(j)
                if v:
                    acc += c * v
            if acc:
                out[i] = acc
        return out


def rank(matrix):
    return matrix.rank()


def kernel_basis(matrix):
    return matrix.kernel_basis()


class ComplexWindow:
    """A finite window of a chain complex with exact differentials.

    ``spaces[n]`` lists the basis labels of the degree-n slot; ``diff[n]`` is
    the matrix of d : C_n -> C_{n-1} (rows indexed by C_{n-1} labels).
    """

    def __init__(self, spaces, diffs):
        self.spaces = spaces
        self.index = {
            n: {label: i for i, label in enumerate(labels)}
            for n, labels in spaces.items()
        }
        self.diffs = diffs

    def check_square_zero(self):
        """d^2 = 0 wherever both differentials exist; returns offending slots."""
        bad = []
        for n, d_n in self.diffs.items():
            d_prev = self.diffs.get(n - 1)
            if d_prev is None:
                continue
            for j in range(d_n.ncols):
                img = d_n.apply({j: 1})
                img2 = d_prev.apply(img)
                if img2:
                    bad.append((n, j))
        return bad

    def homology_dims(self, slots):
        """dim ker d_n - rank d_{n+1} for each requested slot."""
        bad = self.check_square_zero()
        if bad:
            raise ValueError(f"d^2 != 0 at {bad[:3]} (sign regression upstream)")
        dims = {}
        for n in slots:
            d_n = self.diffs.get(n)
            dim_n = len(self.spaces.get(n, []))
            if d_n is None:
                ker = dim_n
            else:
                ker = dim_n - d_n.rank()
            d_up = self.diffs.get(n + 1)
            im = d_up.rank() if d_up is not None else 0
            dims[n] = ker - im
        return dims

    def is_boundary(self, n, cycle):
        """Solve d z = cycle with z in slot n+1.

        ``cycle`` is a sparse vector over ``spaces[n]`` indices.  Returns
        ``(primitive, None)`` on success or ``(None, certificate)`` where the
        certificate records the reduced residue of the cycle against the image.
        """
        d_n = self.diffs.get(n)
        if d_n is not None and d_n.apply(cycle):
            raise ValueError("input is not a cycle")
        d_up = self.diffs.get(n + 1)
        if d_up is None:
            if not cycle:
                return {}, None
            return None, {"residue": dict(cycle)}
        sol = d_up.solve(cycle)
        if sol is not None:
            return sol, None
        image_rows = []
        for j in range(d_up.ncols):
            col = d_up.apply({j: 1})
            image_rows.append(col)
        pivots, reduced = row_reduce(image_rows, len(self.spaces[n]))
        residue = dict(cycle)
        while residue:
            col = min(residue)
            hit = pivots.get(col)
            if hit is None:
                break
            lead = residue[col]
            for c, v in reduced[hit].items():
                acc = residue.get(c, 0) - lead * v
                if acc:
                    residue[c] = acc
                else:
                    residue.pop(c, None)
        return None, {"residue": residue}


# -- Hochschild windows ------------------------------------------------------


def normalized_monomials(alg, length):
    for i0 in range(alg.dim):
        for rest in itertools.product(alg.reduced, repeat=length):
            yield (i0,) + rest


def full_monomials(alg, length):
    for mono in itertools.product(range(alg.dim), repeat=length + 1):
        yield mono


def hochschild_window(alg, nmax):
    """Normalized Hochschild complex up to tensor length ``nmax``."""
    spaces = {n: list(normalized_monomials(alg, n)) for n in range(nmax + 1)}
    index = {n: {m: i for i, m in enumerate(spaces[n])} for n in spaces}
    diffs = {}
    for n in range(1, nmax + 1):
        mat = ExactMatrix(len(spaces[n - 1]), len(spaces[n]))
        for j, mono in enumerate(spaces[n]):
            img = boundary_b(Chain(alg, {mono: 1}))
            for m, c in img.terms.items():
                mat.set(index[n - 1][m], j, mat.rows[index[n - 1][m]].get(j, 0) + c)
        diffs[n] = mat
    return ComplexWindow(spaces, diffs)


def _unnormalized_b(alg, mono):
    """Hochschild boundary on the full (un-normalized) bar-type complex."""
    p = len(mono) - 1
    pairs = []
    if p == 0:
        return pairs
    shifts = [shifted(alg, i) for i in mono]
    prefix = 0
    for k in range(p):
        prefix ^= shifts[k]
        sign = -1 if (prefix + 1) % 2 else 1
        vec = alg.mul_basis(mono[k], mono[k + 1])
        for idx, c in enumerate(vec):
            if c:
                pairs.append((mono[:k] + (idx,) + mono[k + 2 :], sign * c))
    wrap = (alg.deg(mono[p]) + shifts[p] * sum(shifts[:p])) % 2
    sign = -1 if wrap else 1
    vec = alg.mul_basis(mono[p], mono[0])
    for idx, c in enumerate(vec):
        if c:
            pairs.append(((idx,) + mono[1:p], sign * c))
    return pairs


def unnormalized_window(alg, nmax):
    """The same homology computed on the full tensor complex (cross oracle)."""
    spaces = {n: list(full_monomials(alg, n)) for n in range(nmax + 1)}
    index = {n: {m: i for i, m in enumerate(spaces[n])} for n in spaces}
    diffs = {}
    for n in range(1, nmax + 1):
        mat = ExactMatrix(len(spaces[n - 1]), len(spaces[n]))
        for j, mono in enumerate(spaces[n]):
            for m, c in merge_terms(_unnormalized_b(alg, mono)).items():
                i = index[n - 1][m]
                mat.set(i, j, mat.rows[i].get(j, 0) + c)
        diffs[n] = mat
    return ComplexWindow(spaces, diffs)


def hochschild_dims(alg, nmax, oracle=True):
    """Normalized homology dims, optionally cross-checked un-normalized."""
    win = hochschild_window(alg, nmax + 1)
    dims = win.homology_dims(range(nmax + 1))
    result = [dims[n] for n in range(nmax + 1)]
    if oracle:
        ref = unnormalized_window(alg, nmax + 1).homology_dims(range(nmax + 1))
        ref_list = [ref[n] for n in range(nmax + 1)]
        if ref_list != result:
            raise ValueError(
                f"normalized/unnormalized homology disagree: {result} vs {ref_list}"
            )
    return result


# -- negative-cyclic / periodic windows --------------------------------------


def cyclic_window(alg, max_len, u_window):
    """Window of the (b + uB)-complex graded by total degree.

    Labels are ``(upow, monomial)``; the differential keeps rows for images
    that fall outside the window, so solutions of ``d z = c`` are sound.
    """
    ulo, uhi = u_window
    labels = {}
    for upow in range(ulo, uhi + 1):
        for length in range(0, max_len + 1):
            for mono in normalized_monomials(alg, length):
                n = monomial_degree(alg, mono) - 2 * upow
                labels.setdefault(n, []).append((upow, mono))
    spaces = dict(labels)
    index = {n: {lab: i for i, lab in enumerate(spaces[n])} for n in spaces}
    diffs = {}
    for n in sorted(spaces):
        if (n - 1) not in spaces:
            continue
        rows_index = dict(index[n - 1])
        cols = spaces[n]
        mat_rows = {}
        for j, (upow, mono) in enumerate(cols):
            img = []
            bimg = boundary_b(Chain(alg, {mono: 1}))
            for m, c in bimg.terms.items():
                img.append(((upow, m), c))
            Bimg = connes_B(Chain(alg, {mono: 1}))
            for m, c in Bimg.terms.items():
                img.append(((upow + 1, m), c))
            for lab, c in img:
                if lab not in rows_index:
                    rows_index[lab] = len(rows_index)
                i = rows_index[lab]
                mat_rows[(i, j)] = mat_rows.get((i, j), 0) + c
        mat = ExactMatrix(len(rows_index), len(cols))
        for (i, j), c in mat_rows.items():
            if c:
                mat.set(i, j, c)
        diffs[n] = mat
        # overflow rows (u-power beyond the window) live only inside the
        # matrix: u never decreases under b or B, so their further images
        # cannot re-enter the window and solving d z = c stays sound.
    return ComplexWindow(spaces, diffs)
