import pytest

from hochcalc.algebra import (
    CORPUS,
    FAMILIES,
    GradedAlgebra,
    algebra_from_json,
    algebra_to_json,
    dual_numbers,
    family_cubic_st,
    family_velocity,
    family_xx_t,
    matrix2,
    upper_triangular2,
    validate_algebra,
)
from hochcalc.algebra import exterior_line
from hochcalc.cochains import hochschild_delta


def test_corpus_validates():
    for name, make in CORPUS.items():
        rep = validate_algebra(make())
        assert rep.passed, (name, rep.violations[:3])


def test_families_validate():
    for name, make in FAMILIES.items():
        rep = validate_algebra(make())
        assert rep.passed, (name, rep.violations[:3])


def test_exterior_line_validates():
    assert validate_algebra(exterior_line()).passed


def test_matrix2_products():
    a = matrix2()
    I, E11, E12, E21 = (a.basis_vec(i) for i in range(4))
    assert a.mul_vec(E12, E21) == E11
    e22 = tuple(x - y for x, y in zip(I, E11))
    assert a.mul_vec(E21, E12) == e22
    assert a.mul_vec(E12, E12) == a.zero_vec()


def test_corrupted_associativity_detected():
    # corrupt upper-triangular: set E11 * E12 = E11 instead of E12
    a = upper_triangular2()
    mul = [[list(row) for row in plane] for plane in a.mul]
    mul[1][2] = [0, 1, 0]
    bad = GradedAlgebra(a.degrees, mul, name="corrupted")
    rep = validate_algebra(bad)
    assert not rep.passed
    kinds = {v["kind"] for v in rep.violations}
    assert "associativity" in kinds
    witnesses = [v["witness"] for v in rep.violations if v["kind"] == "associativity"]
    assert witnesses, "expected a witness triple"


def test_validate_accepts_nonbasis_unit():
    # elementary-matrix presentation of M_2: unit is E11 + E22
    m = 4
    mul = [[[0] * m for _ in range(m)] for _ in range(m)]
    # basis E11, E12, E21, E22
    def E(i, j):
        return {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}[(i, j)]

    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    if j == k:
                        mul[E(i, j)][E(k, l)][E(i, l)] = 1
    alg = GradedAlgebra([0] * 4, mul, unit_index=None, name="m2_elementary")
    rep = validate_algebra(alg, unit_vector=(1, 0, 0, 1))
    assert rep.passed, rep.violations[:3]


def test_family_velocity_dual_numbers():
    fam = family_xx_t()
    mdot = family_velocity(fam, "t", t=0)
    assert mdot.value((1, 1)) == (1, 0)
    assert hochschild_delta(mdot).is_zero()


def test_family_velocity_constant_family():
    # constant family: encode dual numbers with Poly entries
    from hochcalc.scalars import Poly

    base = dual_numbers()
    mul = [[[Poly.const(c) for c in row] for row in plane] for plane in base.mul]
    fam = GradedAlgebra(base.degrees, mul, name="constant_family")
    mdot = family_velocity(fam, "t")
    assert mdot.is_zero()


def test_family_velocity_cubic_st():
    fam = family_cubic_st()
    # oracle: symbolic differentiation of the structure constants
    for direction in ("s", "t"):
        mdot = family_velocity(fam, direction, s=0, t=0)
        for i in fam.reduced:
            for j in fam.reduced:
                expected = tuple(
                    c.diff(direction).eval(0, 0) if hasattr(c, "diff") else 0
                    for c in fam.mul[i][j]
                )
                assert mdot.value((i, j)) == expected
        assert hochschild_delta(mdot).is_zero()


def test_family_velocity_delta_closed_everywhere():
    from fractions import Fraction

    for name, make in FAMILIES.items():
        fam = make()
        for direction in ("s", "t"):
            for point in ((0, 0), (1, 2), (Fraction(1, 2), Fraction(-1, 3))):
                mdot = family_velocity(fam, direction, s=point[0], t=point[1])
                assert hochschild_delta(mdot).is_zero(), (name, direction, point)


def test_json_roundtrip():
    for make in (dual_numbers, matrix2, family_cubic_st):
        a = make()
        b = algebra_from_json(algebra_to_json(a))
        assert b.mul == a.mul
        assert b.degrees == a.degrees
