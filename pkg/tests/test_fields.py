from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmod.errors import ConfigurationError, FieldMismatchError
from qmod.fields import (
    DEFAULT_PRIME,
    MIN_SAMPLING_PRIME,
    QQ,
    PrimeField,
    derived_rng,
    is_prime,
    require_sampling_prime,
)


def test_is_prime_known_values():
    assert is_prime(2)
    assert is_prime(3)
    assert is_prime(65537)
    assert is_prime(DEFAULT_PRIME)
    assert not is_prime(1)
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(2 ** 61 + 1)


def test_default_prime_is_mersenne():
    assert DEFAULT_PRIME == 2 ** 61 - 1


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(ConfigurationError):
        PrimeField(91)
    with pytest.raises(ConfigurationError):
        PrimeField(2)


def test_prime_field_coercion(fp):
    assert fp.coerce(-1) == fp.p - 1
    assert fp.coerce("12") == 12
    with pytest.raises(FieldMismatchError):
        fp.coerce(True)
    with pytest.raises(FieldMismatchError):
        fp.coerce(Fraction(1, 2))


def test_prime_field_explicit_rational_reduction(fp):
    half = fp.from_rational(Fraction(1, 2))
    assert fp.mul(half, 2) == 1


@given(st.integers(min_value=1, max_value=10 ** 9))
def test_prime_field_inverse(a):
    fp = PrimeField(DEFAULT_PRIME)
    assert fp.mul(a % fp.p, fp.inv(a)) == 1


def test_inverse_of_zero_raises(fp):
    with pytest.raises(ZeroDivisionError):
        fp.inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_qq_arithmetic_is_exact():
    third = QQ.coerce("1/3")
    assert QQ.add(third, third) == Fraction(2, 3)
    assert QQ.mul(third, 3) == 1
    assert QQ.format(Fraction(3)) == "3/1"


def test_derived_rng_is_deterministic():
    a = derived_rng(7, "curve", 3).random()
    b = derived_rng(7, "curve", 3).random()
    assert a == b


def test_derived_rng_separates_labels():
    streams = {
        derived_rng(0, "curve", 3).randrange(2 ** 61),
        derived_rng(0, "curve", 4).randrange(2 ** 61),
        derived_rng(0, "chord", 3).randrange(2 ** 61),
        derived_rng(1, "curve", 3).randrange(2 ** 61),
    }
    assert len(streams) == 4


def test_sampling_prime_gate():
    require_sampling_prime(QQ)
    require_sampling_prime(PrimeField(DEFAULT_PRIME))
    with pytest.raises(ConfigurationError):
        require_sampling_prime(PrimeField(101))
    assert MIN_SAMPLING_PRIME == 2 ** 16
