"""Normalized Hochschild cochains with cup, circle, bracket, braces and delta.

A cochain of arity d is a sparse table on d-tuples of reduced basis indices
with values in the algebra; it is homogeneous with a fixed map degree, so the
total degree is ``map_degree + arity``.  The multiplication cochain is *not*
normalized and is handled by a dedicated dense object (``MulCochain``) that
the brace machinery accepts at the root.
"""

import itertools


class Cochain:
    """Sparse normalized Hochschild cochain with values in the algebra."""

    __slots__ = ("algebra", "arity", "map_degree", "table")

    def __init__(self, algebra, arity, map_degree, table=None):
        self.algebra = algebra
        self.arity = arity
        self.map_degree = map_degree
        clean = {}
        if table:
            for args, vec in table.items():
                if any(vec):
                    clean[tuple(args)] = tuple(vec)
        self.table = clean

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        """Total degree: map degree plus arity."""
        return self.map_degree + self.arity

    def is_zero(self):
        return not self.table

    def value(self, args):
        return self.table.get(tuple(args), self.algebra.zero_vec())

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (
            self.arity == other.arity
            and self.map_degree == other.map_degree
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.arity, self.map_degree, frozenset(self.table.items())))

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if (self.arity, self.map_degree) != (other.arity, other.map_degree):
            raise ValueError("cochain shapes differ")
        table = dict(self.table)
        for args, vec in other.table.items():
            cur = table.get(args, self.algebra.zero_vec())
            table[args] = tuple(a + b for a, b in zip(cur, vec))
        return Cochain(self.algebra, self.arity, self.map_degree, table)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return Cochain(self.algebra, self.arity, self.map_degree, {})
        return Cochain(
            self.algebra,
            self.arity,
            self.map_degree,
            {args: tuple(c * v for v in vec) for args, vec in self.table.items()},
        )

    def atoms(self):
        """Expand over elementary cochains: yields ``((arity, args, k), coeff)``."""
        for args, vec in self.table.items():
            for k, c in enumerate(vec):
                if c:
                    yield (self.arity, args, k), c

    def __repr__(self):
        if self.is_zero():
            return f"Cochain(0; arity={self.arity})"
        bits = ", ".join(f"{args}->{vec}" for args, vec in sorted(self.table.items()))
        return f"Cochain(arity={self.arity}, g={self.map_degree}; {bits})"


def zero_cochain(algebra, arity=0, map_degree=0):
    return Cochain(algebra, arity, map_degree, {})


def element_cochain(algebra, vec, map_degree=None):
    """An algebra element as an arity-0 cochain."""
    if map_degree is None:
        map_degree = algebra.vec_deg(vec) or 0
    return Cochain(algebra, 0, map_degree, {(): tuple(vec)})


def unit_cochain(algebra):
    return element_cochain(algebra, algebra.unit_vec(), 0)


def cochain_from_atom(algebra, atom, coeff=1):
    arity, args, k = atom
    vec = tuple(coeff if i == k else 0 for i in range(algebra.dim))
    g = algebra.deg(k) - sum(algebra.deg(a) for a in args)
    return Cochain(algebra, arity, g, {args: vec})


def atom_degree(algebra, atom):
    arity, args, k = atom
    return algebra.deg(k) - sum(algebra.deg(a) for a in args) + arity


class MulCochain:
    """The multiplication 2-cochain ``(a, b) -> (-1)^{|a|} a b``.

    Dense over the full basis (it does not vanish on the unit), so it never
    enters the normalized ``Cochain`` type; the brace evaluator and the tree
    calculus accept it directly.
    """

    __slots__ = ("algebra",)
    arity = 2
    map_degree = 0

    def __init__(self, algebra):
        self.algebra = algebra

    @property
    def degree(self):
        return 2

    def value(self, args):
        i, j = args
        sign = -1 if self.algebra.deg(i) % 2 else 1
        return tuple(sign * c for c in self.algebra.mul_basis(i, j))

    def entries(self):
        rng = range(self.algebra.dim)
        for i in rng:
            for j in rng:
                vec = self.value((i, j))
                if any(vec):
                    yield (i, j), vec

    def __repr__(self):
        return f"MulCochain({self.algebra.name})"


def _entries(coch):
    if isinstance(coch, MulCochain):
        return list(coch.entries())
    return list(coch.table.items())


def _shifted(algebra, idx):
    return (algebra.deg(idx) + 1) % 2


def cup(D, E):
    """Cup product; sign ``(-1)^{|E| * sum_{i<=d}(|a_i|+1)}`` on the left block."""
    alg = D.algebra
    out = {}
    e_deg = E.degree
    for sig, vd in _entries(D):
        pref = sum(_shifted(alg, a) for a in sig)
        sign = -1 if (e_deg * pref) % 2 else 1
        for tau, ve in _entries(E):
            args = sig + tau
            val = alg.mul_vec(vd, ve)
            if any(val):
                cur = out.get(args, alg.zero_vec())
                out[args] = tuple(x + sign * y for x, y in zip(cur, val))
    return Cochain(alg, D.arity + E.arity, D.map_degree + E.map_degree, out)


def circle(D, E):
    """Circle (pre-composition) product: insert ``E`` into each slot of ``D``."""
    return brace(D, [E])


def bracket(D, E):
    """Gerstenhaber bracket with the shifted-parity twist."""
    sign = -1 if ((D.degree + 1) * (E.degree + 1)) % 2 else 1
    lhs = brace(D, [E])
    rhs = brace(E, [D]).scale(sign)
    return lhs - rhs


def brace(D, inserts):
    """Brace operation ``D{E_1, ..., E_k}``.

    Sums over order-preserving, non-overlapping insertions of the arguments
    into the slots of ``D``; each inserted value contributes its reduced part
    (unit components vanish by normalization) unless ``D`` is the dense
    multiplication cochain.
    """
    if not inserts:
        if isinstance(D, MulCochain):
            raise ValueError("the bare multiplication cochain is not normalized")
        return D
    alg = D.algebra
    d = D.arity
    k = len(inserts)
    keep_unit = not isinstance(D, MulCochain)
    out = {}
    out_arity = d + sum(E.arity for E in inserts) - k
    out_gdeg = D.map_degree + sum(E.map_degree for E in inserts)
    if k > d:
        return Cochain(alg, max(out_arity, 0), out_gdeg, {})
    for sig, vd in _entries(D):
        for slots in itertools.combinations(range(d), k):
            for choice in itertools.product(*(_entries(E) for E in inserts)):
                coeff = 1
                ok = True
                for (slot, (tau, ve), E) in zip(slots, choice, inserts):
                    idx = sig[slot]
                    if keep_unit and idx == 0:
                        ok = False
                        break
                    c = ve[idx]
                    if not c:
                        ok = False
                        break
                    coeff = coeff * c
                if not ok:
                    continue
                args = []
                exp = 0
                pos = 0
                prefix = 0
                for slot in range(d):
                    if pos < k and slots[pos] == slot:
                        tau = choice[pos][0]
                        exp += (inserts[pos].degree + 1) * prefix
                        for a in tau:
                            args.append(a)
                            prefix += _shifted(alg, a)
                        pos += 1
                    else:
                        a = sig[slot]
                        args.append(a)
                        prefix += _shifted(alg, a)
                if exp % 2:
                    coeff = -coeff
                args = tuple(args)
                cur = out.get(args, alg.zero_vec())
                out[args] = tuple(x + coeff * y for x, y in zip(cur, vd))
    return Cochain(alg, out_arity, out_gdeg, out)


def hochschild_delta(D):
    """Hochschild differential by the explicit three-term formula."""
    alg = D.algebra
    d = D.arity
    tdeg = D.degree
    out = {}

    def bump(args, vec, exp):
        if not any(vec):
            return
        sign = -1 if exp % 2 else 1
        cur = out.get(args, alg.zero_vec())
        out[args] = tuple(x + sign * y for x, y in zip(cur, vec))

    for sig, vd in _entries(D):
        for i in alg.reduced:
            # a_1 * D(a_2, ..)
            exp = alg.deg(i) * tdeg + tdeg + 1
            bump((i,) + sig, alg.mul_vec(alg.basis_vec(i), vd), exp)
            # D(.., a_d) * a_{d+1}; exponent |D| + sum(|a_i|+1), pinned by
            # delta^2 = 0 and delta = [m, D] (the product form misprints it)
            exp = tdeg + sum(_shifted(alg, a) for a in sig)
            bump(sig + (i,), alg.mul_vec(vd, alg.basis_vec(i)), exp)
        for j in range(1, d + 1):
            hole = sig[j - 1]
            for p in alg.reduced:
                for q in alg.reduced:
                    c = alg.mul_basis(p, q)[hole]
                    if not c:
                        continue
                    args = sig[: j - 1] + (p, q) + sig[j:]
                    exp = tdeg + 1 + sum(_shifted(alg, a) for a in args[:j])
                    bump(args, tuple(c * v for v in vd), exp)
    return Cochain(alg, d + 1, D.map_degree, out)


def internal_delta(D):
    """Differential induced by the algebra's own differential (DGA ground)."""
    alg = D.algebra
    if alg.differential is None:
        return zero_cochain(alg, D.arity, D.map_degree + 1)
    out = {}

    def bump(args, vec, exp):
        if not any(vec):
            return
        sign = -1 if exp % 2 else 1
        cur = out.get(args, alg.zero_vec())
        out[args] = tuple(x + sign * y for x, y in zip(cur, vec))

    for sig, vd in _entries(D):
        bump(sig, alg.d_vec(vd), 0)
        for j in range(D.arity):
            dv = alg.d_vec(alg.basis_vec(sig[j]))
            for k, c in enumerate(dv):
                if not c or k == 0:
                    continue
                args = sig[:j] + (k,) + sig[j + 1 :]
                exp = D.degree + 1 + sum(_shifted(alg, a) for a in sig[:j])
                bump(args, tuple(c * v for v in vd), exp)
    return Cochain(alg, D.arity, D.map_degree + 1, out)


def lift(D, args):
    """The k-th brace lift evaluated on cochain arguments."""
    return brace(D, list(args))


def random_cochain(alg, arity, rng, map_degree=0, lo=-2, hi=2):
    """Random homogeneous cochain: values respect degree additivity."""
    table = {}
    for args in itertools.product(alg.reduced, repeat=arity):
        target = map_degree + sum(alg.deg(a) for a in args)
        vec = [0] * alg.dim
        filled = False
        for k in range(alg.dim):
            if alg.deg(k) == target:
                c = rng.randint(lo, hi)
                if c:
                    vec[k] = c
                    filled = True
        if filled:
            table[args] = tuple(vec)
    return Cochain(alg, arity, map_degree, table)


def reduce_big(E):
    """Reduce a cochain modulo the unit cochain (kills the unit component)."""
    if E.arity != 0:
        return E
    table = {}
    for args, vec in E.table.items():
        v = E.algebra.reduce_vec(vec)
        if any(v):
            table[args] = v
    return Cochain(E.algebra, 0, E.map_degree, table)


def check_etoee(alg, arg_tuples):
    """Check that the brace lift is a morphism of differential graded algebras.

    ``arg_tuples`` is an iterable of (D, E, [cochain args]) samples; both the
    multiplicative half and the differential half are evaluated pointwise.
    Returns a report dict.
    """
    failures = []
    checked = 0
    for D, E, args in arg_tuples:
        k = len(args)
        # multiplicative half on (D, E): compare sum over splits.
        lhs = zero_cochain(alg)
        for split in range(k + 1):
            left = brace(D, args[:split])
            pref = sum(F.degree + 1 for F in args[:split])
            sign = -1 if (E.degree * pref) % 2 else 1
            term = cup(left, brace(E, args[split:])).scale(sign)
            lhs = term if lhs.is_zero() else lhs + term
        rhs = brace(cup(D, E), args)
        if lhs != rhs:
            failures.append(("cup-half", D, E, args))
        # differential half on D with the sampled args.
        lhs2 = zero_cochain(alg)

        def acc(coch, exp):
            nonlocal lhs2
            if coch.is_zero():
                return
            term = coch.scale(-1 if exp % 2 else 1)
            lhs2 = term if lhs2.is_zero() else lhs2 + term

        tdeg = D.degree
        if args:
            e1 = args[0]
            acc(cup(e1, brace(D, args[1:])), e1.degree * tdeg + tdeg + 1)
            for j in range(1, k):
                merged = reduce_big(cup(args[j - 1], args[j]))
                sub = args[: j - 1] + [merged] + args[j + 1 :]
                exp = tdeg + 1 + sum(F.degree + 1 for F in args[:j])
                acc(brace(D, sub), exp)
            acc(cup(brace(D, args[:-1]), args[-1]), tdeg + sum(F.degree + 1 for F in args[:-1]))
            acc(hochschild_delta(brace(D, args)), 0)
            for i in range(k):
                # slot sign (-1)^{|Phi| + prefix}: pinned by the morphism test
                exp = tdeg + sum(F.degree + 1 for F in args[:i])
                sub = args[:i] + [hochschild_delta(args[i])] + args[i + 1 :]
                acc(brace(D, sub), exp)
            rhs2 = brace(hochschild_delta(D), args)
            if lhs2 != rhs2:
                failures.append(("delta-half", D, None, args))
        checked += 1
    return {"checked": checked, "failures": failures, "passed": not failures}
