import random

import pytest

from hochcalc.algebra import (
    dual_numbers,
    exterior_line,
    group_z2,
    matrix2,
    rationals,
    truncated_poly3,
    upper_triangular2,
)
from hochcalc.chains import (
    Chain,
    USeries,
    basis_monomials,
    boundary_b,
    chain_internal_delta,
    chain_monomial,
    connes_B,
    cyclic_differential,
    cyclic_shuffle,
    shuffle,
)

LAM = dual_numbers()
M2 = matrix2()

CORPUS = [rationals(), LAM, truncated_poly3(), M2, upper_triangular2(), group_z2()]


def test_b_examples_dual_numbers():
    assert boundary_b(chain_monomial(LAM, (0, 1))).is_zero()  # b(1(x)x) = x - x
    c = boundary_b(chain_monomial(LAM, (0, 1, 1)))
    assert c.terms == {(1, 1): 2}  # b(1(x)x(x)x) = 2(x(x)x)
    assert boundary_b(chain_monomial(LAM, (1, 1, 1))).is_zero()


def test_b_example_m2():
    # b(E11 (x) E12) = E11 E12 - E12 E11 = E12
    c = boundary_b(chain_monomial(M2, (1, 2)))
    assert c.terms == {(2,): 1}


def test_B_examples():
    assert connes_B(chain_monomial(LAM, (1,))).terms == {(0, 1): 1}  # B(x) = 1(x)x
    assert connes_B(chain_monomial(LAM, (0, 1))).is_zero()
    assert connes_B(chain_monomial(LAM, (1, 1))).is_zero()  # two terms cancel


def test_differential_squares_corpus():
    for alg in CORPUS:
        for length in range(0, 5):
            for mono in basis_monomials(alg, length):
                x = chain_monomial(alg, mono)
                assert boundary_b(boundary_b(x)).is_zero(), (alg.name, mono)
                assert connes_B(connes_B(x)).is_zero(), (alg.name, mono)
                anti = boundary_b(connes_B(x)) + connes_B(boundary_b(x))
                assert anti.is_zero(), (alg.name, mono)


def test_differential_squares_graded():
    alg = exterior_line()
    for length in range(0, 5):
        for mono in basis_monomials(alg, length):
            x = chain_monomial(alg, mono)
            assert boundary_b(boundary_b(x)).is_zero(), mono
            assert connes_B(connes_B(x)).is_zero(), mono
            assert (boundary_b(connes_B(x)) + connes_B(boundary_b(x))).is_zero(), mono


def test_cyclic_differential_on_x():
    s = USeries.from_chain(chain_monomial(LAM, (1,)), 0, lo=0, hi=3)
    ds = cyclic_differential(s)
    assert ds.level(0).is_zero()
    assert ds.level(1).terms == {(0, 1): 1}


def test_cyclic_differential_squares():
    rng = random.Random(5)
    for alg in (LAM, M2):
        monos = [m for l in range(0, 4) for m in basis_monomials(alg, l)]
        for _ in range(10):
            terms = {}
            for _ in range(3):
                m = rng.choice(monos)
                terms[m] = terms.get(m, 0) + rng.randint(-2, 2)
            s = USeries(alg, {0: Chain(alg, terms)}, lo=0, hi=3)
            dds = cyclic_differential(cyclic_differential(s))
            assert dds.is_zero_on(range(0, 4))


def test_zero_series():
    s = USeries(LAM, {}, 0, 3)
    assert cyclic_differential(s).is_zero_on(range(0, 4))


def test_shuffle_unit():
    one = chain_monomial(LAM, (0,))
    y = chain_monomial(LAM, (1, 1))
    assert shuffle(one, y) == y
    assert shuffle(y, one) == y


def test_shuffle_simple():
    x = chain_monomial(LAM, (1,))
    c = shuffle(x, chain_monomial(LAM, (0, 1)))
    assert c.terms == {(1, 1): 1}  # x * (1 (x) x) = x (x) x


def test_shuffle_is_chain_map_b():
    # on the commutative corpus, b is a derivation for the shuffle product
    rng = random.Random(9)
    for alg in (LAM, truncated_poly3(), group_z2()):
        monos = [m for l in range(0, 3) for m in basis_monomials(alg, l)]
        for _ in range(12):
            ma, mb = rng.choice(monos), rng.choice(monos)
            x = chain_monomial(alg, ma)
            y = chain_monomial(alg, mb)
            if x.is_zero() or y.is_zero():
                continue
            lhs = boundary_b(shuffle(x, y))
            sign = -1 if (len(ma) - 1) % 2 else 1
            rhs = shuffle(boundary_b(x), y) + shuffle(x, boundary_b(y)).scale(sign)
            assert lhs == rhs, (alg.name, ma, mb)


def test_full_shuffle_chain_map_with_u():
    # (b + uB)(sh + u sh') = (sh + u sh')((b+uB) (x) 1 +- 1 (x) (b+uB))
    rng = random.Random(21)
    for alg in (LAM, truncated_poly3(), group_z2()):
        monos = [m for l in range(0, 3) for m in basis_monomials(alg, l)]
        for _ in range(14):
            ma, mb = rng.choice(monos), rng.choice(monos)
            x = chain_monomial(alg, ma)
            y = chain_monomial(alg, mb)
            if x.is_zero() or y.is_zero():
                continue
            deg_x = (len(ma) - 1) % 2

            def product(a, b):
                return {0: shuffle(a, b), 1: cyclic_shuffle(a, b)}

            lhs0 = boundary_b(shuffle(x, y))
            lhs1 = connes_B(shuffle(x, y)) + boundary_b(cyclic_shuffle(x, y))
            sign = -1 if deg_x else 1
            bx, by = boundary_b(x), boundary_b(y)
            Bx, By = connes_B(x), connes_B(y)
            rhs0 = shuffle(bx, y) + shuffle(x, by).scale(sign)
            rhs1 = (
                cyclic_shuffle(bx, y)
                + cyclic_shuffle(x, by).scale(sign)
                + shuffle(Bx, y)
                + shuffle(x, By).scale(sign)
            )
            assert lhs0 == rhs0, (alg.name, ma, mb, "u^0")
            assert lhs1 == rhs1, (alg.name, ma, mb, "u^1")
