import itertools
import random

import pytest

from hochcalc.algebra import dual_numbers, exterior_line, matrix2, truncated_poly3
from hochcalc.cochains import (
    Cochain,
    MulCochain,
    brace,
    bracket,
    check_etoee,
    circle,
    cup,
    element_cochain,
    hochschild_delta,
    random_cochain,
    unit_cochain,
    zero_cochain,
)

LAM = dual_numbers()
M2 = matrix2()


def phi():
    # x -> 1
    return Cochain(LAM, 1, 0, {(1,): (1, 0)})


def psi():
    # x -> x
    return Cochain(LAM, 1, 0, {(1,): (0, 1)})


def test_cup_phi_phi():
    c = cup(phi(), phi())
    assert c.value((1, 1)) == (-1, 0)


def test_cup_psi_psi():
    c = cup(psi(), psi())
    assert c.is_zero()  # -x*x = 0 in the dual numbers


def test_cup_with_zero():
    z = zero_cochain(LAM, 1, 0)
    assert cup(phi(), z).is_zero()
    assert cup(z, phi()).is_zero()


def test_circle_examples():
    assert circle(phi(), psi()).value((1,)) == (1, 0)  # phi(psi(x)) = 1
    assert circle(psi(), phi()).is_zero()  # psi(1bar) = 0 by normalization
    assert bracket(phi(), psi()).value((1,)) == (1, 0)


def test_delta_of_unit_cochain():
    assert hochschild_delta(unit_cochain(LAM)).is_zero()


def test_delta_of_element_m2():
    e11 = element_cochain(M2, M2.basis_vec(1))
    d = hochschild_delta(e11)
    # delta(c)(a) = c a - a c up to the displayed signs; on E12 it gives E12
    assert d.value((2,)) == M2.basis_vec(2)


def test_delta_psi_vanishes():
    assert hochschild_delta(psi()).is_zero()


def test_delta_squared_zero_random():
    rng = random.Random(7)
    for alg in (LAM, M2, truncated_poly3(), exterior_line()):
        for arity in (0, 1, 2):
            for _ in range(4):
                D = random_cochain(alg, arity, rng)
                dd = hochschild_delta(hochschild_delta(D))
                assert dd.is_zero(), (alg.name, arity)


def test_delta_matches_bracket_with_multiplication():
    # dedicated check that the displayed formula equals [m, D] computed via
    # the dense multiplication cochain and braces
    rng = random.Random(3)
    for alg in (LAM, M2, exterior_line()):
        m = MulCochain(alg)
        for arity in (0, 1, 2):
            D = random_cochain(alg, arity, rng)
            sign = -1 if ((m.degree + 1) * (D.degree + 1)) % 2 else 1
            commutator = brace(m, [D]) - brace(D, [m]).scale(sign)
            assert commutator == hochschild_delta(D), (alg.name, arity)


def test_delta_leibniz_cup():
    rng = random.Random(11)
    for alg in (LAM, M2, exterior_line()):
        for _ in range(6):
            D = random_cochain(alg, rng.choice([0, 1, 2]), rng)
            E = random_cochain(alg, rng.choice([0, 1, 2]), rng)
            lhs = hochschild_delta(cup(D, E))
            sign = -1 if D.degree % 2 else 1
            rhs = cup(hochschild_delta(D), E) + cup(D, hochschild_delta(E)).scale(sign)
            assert lhs == rhs


def test_delta_leibniz_bracket():
    rng = random.Random(13)
    for alg in (LAM, M2):
        for _ in range(6):
            D = random_cochain(alg, rng.choice([1, 2]), rng)
            E = random_cochain(alg, rng.choice([1, 2]), rng)
            lhs = hochschild_delta(bracket(D, E))
            sign = -1 if (D.degree + 1) % 2 else 1
            rhs = bracket(hochschild_delta(D), E) + bracket(D, hochschild_delta(E)).scale(sign)
            assert lhs == rhs


def test_graded_jacobi():
    rng = random.Random(17)
    for alg in (LAM, M2):
        for _ in range(4):
            D = random_cochain(alg, rng.choice([1, 2]), rng)
            E = random_cochain(alg, rng.choice([1, 2]), rng)
            F = random_cochain(alg, rng.choice([1, 2]), rng)
            pD, pE, pF = (X.degree + 1 for X in (D, E, F))
            lhs = bracket(D, bracket(E, F))
            mid = bracket(bracket(D, E), F)
            sign = -1 if (pD * pE) % 2 else 1
            rhs = mid + bracket(E, bracket(D, F)).scale(sign)
            assert lhs == rhs


def test_brace_empty_and_single():
    assert brace(phi(), []) == phi()
    assert brace(phi(), [psi()]) == circle(phi(), psi())


def test_brace_composition_identity():
    # (D{E_1..E_k}){F_1..F_l} expanded against the two-level identity
    rng = random.Random(23)
    for alg in (LAM, M2):
        for _ in range(8):
            D = random_cochain(alg, 2, rng)
            E = random_cochain(alg, rng.choice([1, 2]), rng)
            F = random_cochain(alg, 1, rng)
            lhs = brace(brace(D, [E]), [F])
            # right side: F lands inside E, or F lands in D next to E
            terms = [brace(D, [brace(E, [F])])]
            pE, pF = E.degree + 1, F.degree + 1
            sign = -1 if (pE * pF) % 2 else 1
            terms.append(brace(D, [F, E]).scale(sign))
            terms.append(brace(D, [E, F]))
            rhs = terms[0]
            for t in terms[1:]:
                if not t.is_zero():
                    rhs = rhs + t if not rhs.is_zero() else t
            assert lhs == rhs


def test_mul_brace_vs_cup():
    # m{D, E} = (-1)^{|D|} D cup E, for the dense multiplication cochain
    rng = random.Random(29)
    for alg in (LAM, M2, exterior_line()):
        m = MulCochain(alg)
        for _ in range(5):
            D = random_cochain(alg, rng.choice([0, 1, 2]), rng)
            E = random_cochain(alg, rng.choice([0, 1]), rng)
            sign = -1 if D.degree % 2 else 1
            assert brace(m, [D, E]) == cup(D, E).scale(sign)


def test_lift_is_dga_morphism():
    rng = random.Random(31)
    samples = []
    for _ in range(12):
        D = random_cochain(LAM, rng.choice([0, 1, 2]), rng)
        E = random_cochain(LAM, rng.choice([0, 1, 2]), rng)
        args = [random_cochain(LAM, rng.choice([0, 1]), rng) for _ in range(rng.choice([1, 2]))]
        samples.append((D, E, args))
    report = check_etoee(LAM, samples)
    assert report["passed"], report["failures"][:2]
