import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmod import unipoly as up
from qmod.errors import ConfigurationError, DomainError, ZeroPolynomialError
from qmod.fields import QQ, DEFAULT_PRIME, PrimeField

FP = PrimeField(DEFAULT_PRIME)

poly = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=6)


def _q(cs):
    return up.normalize(QQ, [Fraction(c) for c in cs])


@given(poly, poly)
def test_divmod_round_trip(f, g):
    f, g = _q(f), _q(g)
    if up.is_zero(g):
        return
    q, r = up.divmod_poly(QQ, f, g)
    recombined = up.add(QQ, up.mul(QQ, q, g), r)
    assert recombined == f
    assert up.degree(r) < up.degree(g) or up.is_zero(r)


@given(poly, poly)
def test_gcd_divides_both(f, g):
    f, g = _q(f), _q(g)
    d = up.gcd(QQ, f, g)
    if up.is_zero(d):
        assert up.is_zero(f) and up.is_zero(g)
        return
    assert up.is_zero(up.rem(QQ, f, d))
    assert up.is_zero(up.rem(QQ, g, d))


def test_interpolation_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        deg = rng.randrange(0, 6)
        cs = [FP.random_element(rng) for _ in range(deg + 1)]
        xs = list(range(deg + 1))
        ys = [up.evaluate(FP, cs, x) for x in xs]
        assert up.interpolate(FP, xs, ys) == up.normalize(FP, cs)


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(DomainError):
        up.interpolate(QQ, [Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)])


def test_resultant_of_known_pair():
    # res(x^2 - 1, x - 2) = value of x^2 - 1 at 2, for monic linear g.
    f = _q([-1, 0, 1])
    g = _q([-2, 1])
    assert up.resultant(QQ, f, g) == 3
    assert up.resultant_prs(QQ, f, g) == 3


def test_resultant_routes_agree():
    rng = random.Random(9)
    for _ in range(100):
        f = [FP.random_element(rng) for _ in range(4)]
        g = [FP.random_element(rng) for _ in range(3)]
        f, g = up.normalize(FP, f), up.normalize(FP, g)
        if up.is_zero(f) or up.is_zero(g):
            continue
        assert up.resultant(FP, f, g) == up.resultant_prs(FP, f, g)


def test_discriminant_detects_repeated_roots():
    rng = random.Random(17)
    for _ in range(100):
        # Random monic cubic; square-freeness must match res(f, f') != 0.
        f = [FP.random_element(rng) for _ in range(3)] + [1]
        disc = up.resultant(FP, f, up.derivative(FP, f))
        assert up.squarefree_test(FP, f) == (not FP.is_zero(disc))


def test_resultant_fixed_degenerate_degrees():
    # Declared degrees keep the specialized resultant honest when the
    # leading coefficient vanishes.
    f = _q([1, 1])       # actual degree 1
    g = _q([2])          # actual degree 0
    assert up.resultant_fixed(QQ, f, g, 2, 1) == 0  # degree-2 slot, leader 0
    assert up.resultant_fixed(QQ, f, g, 1, 1) == 2
    assert up.resultant_fixed(QQ, [], [], 0, 0) == 1
    with pytest.raises(DomainError):
        up.resultant_fixed(QQ, f, g, 0, 0)


def test_sylvester_shape():
    f = _q([1, 2, 3])
    g = _q([4, 5])
    m = up.sylvester_matrix(QQ, f, g)
    assert (m.rows, m.cols) == (3, 3)
    m = up.sylvester_matrix(QQ, f, g, 4, 2)
    assert (m.rows, m.cols) == (6, 6)


def test_squarefree_guards():
    with pytest.raises(ZeroPolynomialError):
        up.squarefree_test(QQ, [])
    small = PrimeField(5)
    with pytest.raises(ConfigurationError):
        up.squarefree_test(small, [1, 0, 0, 0, 0, 1])
    assert up.squarefree_test(QQ, _q([1, 0, 1]))
    square = up.mul(QQ, _q([-1, 1]), _q([-1, 1]))
    assert not up.squarefree_test(QQ, square)


def test_root_multiplicity():
    # (x-2)^3 (x-5)
    f = _q([1])
    for _ in range(3):
        f = up.mul(QQ, f, _q([-2, 1]))
    f = up.mul(QQ, f, _q([-5, 1]))
    assert up.root_multiplicity(QQ, f, Fraction(2)) == 3
    assert up.root_multiplicity(QQ, f, Fraction(5)) == 1
    assert up.root_multiplicity(QQ, f, Fraction(7)) == 0


def test_rational_roots_against_full_scan():
    pf = PrimeField(101)
    rng = random.Random(23)
    for _ in range(10):
        f = up.normalize(pf, [pf.random_element(rng) for _ in range(6)])
        if up.is_zero(f):
            continue
        brute = [a for a in range(101) if pf.is_zero(up.evaluate(pf, f, a))]
        assert up.rational_roots(pf, f) == brute


def test_rational_roots_known_factorization():
    pf = PrimeField(101)
    f = [1]
    for r in (3, 7, 90):
        f = up.mul(pf, f, [(-r) % 101, 1])
    f = up.mul(pf, f, [1, 1, 1])  # x^2 + x + 1 stays rootless mod 101
    assert up.rational_roots(pf, f) == [3, 7, 90]


def test_pow_mod_matches_repeated_multiplication():
    pf = PrimeField(101)
    m = [3, 1, 0, 1]  # cubic modulus
    base = [2, 5]
    direct = [1]
    for _ in range(12):
        direct = up.mul_mod(pf, direct, base, m)
    assert up.pow_mod(pf, base, 12, m) == direct
