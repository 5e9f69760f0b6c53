"""Finite-dimensional unital graded algebras over Q and small parametric families.

An algebra is given by a basis, integer degrees, structure constants and an
optional square-zero degree-one differential.  The normalized chain/cochain
machinery relies on the convention that basis element 0 *is* the unit, so the
reduced basis is exactly the index set 1..m-1; ``validate_algebra`` also
accepts a general unit coordinate vector so that corrupted or oddly presented
tables can still be diagnosed.
"""

import json

from .scalars import Poly, as_scalar, rat, rat_str


class GradedAlgebra:
    """Unital associative graded algebra with explicit structure constants.

    ``mul[i][j]`` is the coordinate vector of ``e_i * e_j``.  Entries are
    exact rationals, or ``Poly`` for a parametric family.
    """

    def __init__(self, degrees, mul, unit_index=0, differential=None, name=""):
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        self.mul = tuple(tuple(tuple(row) for row in plane) for plane in mul)
        self.unit_index = unit_index
        self.differential = (
            None if differential is None else tuple(tuple(r) for r in differential)
        )
        self.name = name or "algebra"

    # -- basic structure ---------------------------------------------------

    def deg(self, i):
        return self.degrees[i]

    @property
    def reduced(self):
        """Indices spanning the reduced algebra A/K*1."""
        return range(1, self.dim)

    def is_family(self):
        return any(
            isinstance(c, Poly) for plane in self.mul for row in plane for c in row
        )

    def zero_vec(self):
        return (0,) * self.dim

    def basis_vec(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def unit_vec(self):
        return self.basis_vec(self.unit_index)

    def mul_basis(self, i, j):
        return self.mul[i][j]

    def mul_vec(self, v, w):
        out = [0] * self.dim
        for i, a in enumerate(v):
            if not a:
                continue
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.mul[i][j]):
                    if c:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def d_vec(self, v):
        if self.differential is None:
            return self.zero_vec()
        out = [0] * self.dim
        for i, a in enumerate(v):
            if not a:
                continue
            for k, c in enumerate(self.differential[i]):
                if c:
                    out[k] = out[k] + a * c
        return tuple(out)

    def vec_deg(self, v):
        """Degree of a homogeneous vector; None for 0; error if mixed."""
        found = None
        for i, a in enumerate(v):
            if a:
                if found is None:
                    found = self.degrees[i]
                elif found != self.degrees[i]:
                    raise ValueError("inhomogeneous vector")
        return found

    def reduce_vec(self, v):
        """Project a vector to the reduced algebra (kill the unit slot)."""
        if self.unit_index != 0:
            raise ValueError("reduced convention requires the unit at index 0")
        return (0,) + tuple(v[1:])

    def specialize(self, s=0, t=0):
        """Evaluate a parametric family at an exact rational point."""
        def ev(c):
            return c.eval(s, t) if isinstance(c, Poly) else c

        mul = [[[ev(c) for c in row] for row in plane] for plane in self.mul]
        diff = (
            None
            if self.differential is None
            else [[ev(c) for c in row] for row in self.differential]
        )
        return GradedAlgebra(
            self.degrees,
            mul,
            self.unit_index,
            diff,
            name=f"{self.name}@({rat_str(s)},{rat_str(t)})",
        )

    def __repr__(self):
        kind = "AlgebraFamily" if self.is_family() else "GradedAlgebra"
        return f"{kind}({self.name}, dim={self.dim})"


# -- validation -------------------------------------------------------------


class ValidationReport:
    """Outcome of the structural checks; violations are content, not errors."""

    def __init__(self, name):
        self.name = name
        self.violations = []

    def add(self, kind, witness, detail):
        self.violations.append({"kind": kind, "witness": witness, "detail": detail})

    @property
    def passed(self):
        return not self.violations

    def to_json(self):
        return {
            "algebra": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "violations": self.violations,
        }

    def __repr__(self):
        status = "PASS" if self.passed else f"FAIL({len(self.violations)})"
        return f"ValidationReport({self.name}: {status})"


def validate_algebra(alg, unit_vector=None):
    """Check unit laws, associativity, degree additivity and the differential."""
    rep = ValidationReport(alg.name)
    unit = unit_vector if unit_vector is not None else alg.unit_vec()

    for i, c in enumerate(unit):
        if c and alg.degrees[i] != 0:
            rep.add("unit-degree", i, "unit has a component in nonzero degree")

    for j in range(alg.dim):
        ej = alg.basis_vec(j)
        left = alg.mul_vec(unit, ej)
        right = alg.mul_vec(ej, unit)
        if tuple(as_scalar(c) for c in left) != tuple(as_scalar(c) for c in ej):
            rep.add("left-unit", j, f"1*e_{j} != e_{j}")
        if tuple(as_scalar(c) for c in right) != tuple(as_scalar(c) for c in ej):
            rep.add("right-unit", j, f"e_{j}*1 != e_{j}")

    for i in range(alg.dim):
        for j in range(alg.dim):
            dij = alg.degrees[i] + alg.degrees[j]
            for k, c in enumerate(alg.mul[i][j]):
                if c and alg.degrees[k] != dij:
                    rep.add("degree", (i, j, k), "structure constant violates degree additivity")

    for i in range(alg.dim):
        ei = alg.basis_vec(i)
        for j in range(alg.dim):
            ej = alg.basis_vec(j)
            ij = alg.mul_basis(i, j)
            for k in range(alg.dim):
                ek = alg.basis_vec(k)
                left = alg.mul_vec(ij, ek)
                right = alg.mul_vec(ei, alg.mul_basis(j, k))
                if left != right:
                    rep.add("associativity", (i, j, k), "(e_i e_j) e_k != e_i (e_j e_k)")

    if alg.differential is not None:
        d = alg.differential
        for i in range(alg.dim):
            for k, c in enumerate(d[i]):
                if c and alg.degrees[k] != alg.degrees[i] + 1:
                    rep.add("d-degree", (i, k), "differential is not of degree +1")
        du = alg.d_vec(unit)
        if any(du):
            rep.add("d-unit", None, "differential of the unit is nonzero")
        for i in range(alg.dim):
            dd = alg.d_vec(alg.d_vec(alg.basis_vec(i)))
            if any(dd):
                rep.add("d-squared", i, "d^2 != 0")
        for i in range(alg.dim):
            ei = alg.basis_vec(i)
            for j in range(alg.dim):
                ej = alg.basis_vec(j)
                lhs = alg.d_vec(alg.mul_vec(ei, ej))
                sign = -1 if alg.degrees[i] % 2 else 1
                rhs = tuple(
                    a + sign * b
                    for a, b in zip(alg.mul_vec(alg.d_vec(ei), ej), alg.mul_vec(ei, alg.d_vec(ej)))
                )
                if lhs != rhs:
                    rep.add("leibniz", (i, j), "d is not a graded derivation")

    if alg.is_family():
        for j in range(alg.dim):
            row = alg.mul[alg.unit_index][j]
            for k, c in enumerate(row):
                if isinstance(c, Poly) and not c.is_constant():
                    rep.add("unit-family", (j, k), "unit row depends on the parameters")
    return rep


def family_velocity(family, direction, s=0, t=0):
    """Derivative of the multiplication along a parameter, as a 2-cochain.

    Returns a normalized cochain over the specialization of ``family`` at the
    point; raises if the family's unit row is parameter-dependent.  The result
    is always a Hochschild cocycle (differentiate associativity), which the
    caller can assert via ``cochains.hochschild_delta``.
    """
    from .cochains import Cochain

    if family.unit_index != 0:
        raise ValueError("families must present the unit as basis element 0")
    for j in range(family.dim):
        for c in tuple(family.mul[0][j]) + tuple(family.mul[j][0]):
            if isinstance(c, Poly) and not c.is_constant():
                raise ValueError("unit is not parameter-independent")
    alg = family.specialize(s, t)
    table = {}
    for i in family.reduced:
        for j in family.reduced:
            vec = []
            for c in family.mul[i][j]:
                if isinstance(c, Poly):
                    vec.append(c.diff(direction).eval(s, t))
                else:
                    vec.append(0)
            if any(vec):
                table[(i, j)] = tuple(vec)
    return Cochain(alg, 2, 0, table)


# -- JSON ingestion ---------------------------------------------------------


def algebra_to_json(alg):
    def enc(c):
        if isinstance(c, Poly):
            return c.to_json()
        return rat_str(c)

    products = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k, c in enumerate(alg.mul[i][j]):
                if c:
                    products.append([i, j, k, enc(c)])
    data = {
        "name": alg.name,
        "basis": [f"e{i}" for i in range(alg.dim)],
        "degrees": list(alg.degrees),
        "unit_index": alg.unit_index,
        "products": products,
    }
    if alg.differential is not None:
        data["differential"] = [
            [i, k, enc(c)]
            for i in range(alg.dim)
            for k, c in enumerate(alg.differential[i])
            if c
        ]
    return data


def algebra_from_json(data):
    if isinstance(data, str):
        with open(data) as fh:
            data = json.load(fh)
    degrees = data["degrees"]
    m = len(degrees)

    def dec(raw):
        if isinstance(raw, (str, int)):
            return rat(raw)
        return Poly.from_json(raw)

    mul = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i, j, k, raw in data["products"]:
        mul[i][j][k] = dec(raw)
    diff = None
    if data.get("differential"):
        diff = [[0] * m for _ in range(m)]
        for i, k, raw in data["differential"]:
            diff[i][k] = dec(raw)
    return GradedAlgebra(
        degrees,
        mul,
        data.get("unit_index", 0),
        diff,
        name=data.get("name", "algebra"),
    )


# -- the corpus -------------------------------------------------------------


def rationals():
    """The ground field Q as a one-dimensional algebra."""
    return GradedAlgebra([0], [[[1]]], name="rationals")


def dual_numbers():
    """Q[x]/x^2 with basis (1, x)."""
    mul = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return GradedAlgebra([0, 0], mul, name="dual_numbers")


def exterior_line():
    """Graded dual numbers: one odd generator, x^2 = 0, deg x = 1."""
    mul = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return GradedAlgebra([0, 1], mul, name="exterior_line")


def truncated_poly3():
    """Q[x]/x^3 with basis (1, x, x^2)."""
    m = 3
    mul = [[[0] * m for _ in range(m)] for _ in range(m)]

    def setp(i, j, k):
        mul[i][j][k] = 1

    for i in range(m):
        setp(0, i, i)
        setp(i, 0, i)
    setp(1, 1, 2)
    return GradedAlgebra([0, 0, 0], mul, name="truncated_poly3")


def matrix2():
    """M_2(Q) in the unit-adapted basis (I, E11, E12, E21); E22 = I - E11."""
    m = 4
    I, A, B, C = range(4)  # I, E11, E12, E21
    mul = [[[0] * m for _ in range(m)] for _ in range(m)]

    def put(i, j, combo):
        for k, c in combo:
            mul[i][j][k] = c

    for i in range(m):
        put(I, i, [(i, 1)])
        put(i, I, [(i, 1)])
    put(A, A, [(A, 1)])
    put(A, B, [(B, 1)])
    put(A, C, [])
    put(B, A, [])
    put(B, B, [])
    put(B, C, [(A, 1)])          # E12*E21 = E11
    put(C, A, [(C, 1)])
    put(C, B, [(I, 1), (A, -1)])  # E21*E12 = E22 = I - E11
    put(C, C, [])
    return GradedAlgebra([0] * 4, mul, name="matrix2")


def upper_triangular2():
    """Upper-triangular 2x2 matrices, basis (I, E11, E12); E22 = I - E11."""
    m = 3
    I, A, B = range(3)
    mul = [[[0] * m for _ in range(m)] for _ in range(m)]

    def put(i, j, combo):
        for k, c in combo:
            mul[i][j][k] = c

    for i in range(m):
        put(I, i, [(i, 1)])
        put(i, I, [(i, 1)])
    put(A, A, [(A, 1)])
    put(A, B, [(B, 1)])
    put(B, A, [])
    put(B, B, [])
    return GradedAlgebra([0] * 3, mul, name="upper_triangular2")


def group_z2():
    """The group algebra Q[Z/2], basis (1, g) with g^2 = 1."""
    mul = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    return GradedAlgebra([0, 0], mul, name="group_z2")


def family_xx_t():
    """Q[x]/(x^2 - t): the basic one-parameter deformation of dual numbers."""
    t = Poly.var("t")
    z = Poly.const(0)
    o = Poly.const(1)
    mul = [[[o, z], [z, o]], [[z, o], [t, z]]]
    return GradedAlgebra([0, 0], mul, name="family_xx_t")


def family_x3_tx():
    """Q[x]/(x^3 - t*x), basis (1, x, x^2)."""
    t = Poly.var("t")
    z = Poly.const(0)
    o = Poly.const(1)
    mul = [[[o, z, z], [z, o, z], [z, z, o]],
           [[z, o, z], [z, z, o], [z, t, z]],
           [[z, z, o], [z, t, z], [z, z, t]]]
    # x^2*x^2 = x*(x^3) = x*(t x) = t x^2
    return GradedAlgebra([0, 0, 0], mul, name="family_x3_tx")


def family_cubic_st():
    """Q[x]/(x^3 - s*x - t), the two-parameter cubic family."""
    s = Poly.var("s")
    t = Poly.var("t")
    z = Poly.const(0)
    o = Poly.const(1)
    # x^3 = s x + t;  x^2*x^2 = x*(s x + t) = s x^2 + t x
    mul = [[[o, z, z], [z, o, z], [z, z, o]],
           [[z, o, z], [z, z, o], [t, s, z]],
           [[z, z, o], [t, s, z], [z, t, s]]]
    return GradedAlgebra([0, 0, 0], mul, name="family_cubic_st")


CORPUS = {
    "rationals": rationals,
    "dual_numbers": dual_numbers,
    "truncated_poly3": truncated_poly3,
    "matrix2": matrix2,
    "upper_triangular2": upper_triangular2,
    "group_z2": group_z2,
}

FAMILIES = {
    "family_xx_t": family_xx_t,
    "family_x3_tx": family_x3_tx,
    "family_cubic_st": family_cubic_st,
}
