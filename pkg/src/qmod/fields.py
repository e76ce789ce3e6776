"""Exact coefficient fields: arbitrary-precision rationals and big prime fields.

Scalars are plain Python values, ``fractions.Fraction`` for the rationals
and ``int`` residues in ``[0, p)`` for a prime field; the field objects
carry the arithmetic.  Nothing here ever touches floating point.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import ConfigurationError, FieldMismatchError

# Default modulus: the Mersenne prime 2^61 - 1.  Far above every degree and
# minor bound that appears in this package, so genericity arguments that
# need "p large" hold with room to spare.
DEFAULT_PRIME = (1 << 61) - 1

# Sampling-based checks (random matrices, random points) refuse to run below
# this, keeping per-draw failure probabilities under ~2^-14.
MIN_SAMPLING_PRIME = 1 << 16

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def derived_rng(seed: int, *labels) -> random.Random:
    """Deterministic RNG stream for (seed, labels).

    Distinct labels give independent streams, so adding a new draw site
    never perturbs existing ones.
    """
    tag = "|".join(str(x) for x in labels) + "|" + str(seed)
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class RationalField:
    """The field of exact rationals.  Elements are Fraction values.

    Fraction keeps lowest terms and a positive denominator on its own,
    so every element has one canonical representation.
    """

    char = 0

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldMismatchError(f"cannot coerce {x!r} into QQ")

    def is_element(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, x) -> str:
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, s: str):
        return Fraction(s)

    def random_element(self, rng: random.Random):
        # Small-height rationals; plenty for property tests.
        return Fraction(rng.randrange(-20, 21), rng.randrange(1, 11))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField:
    """F_p for an odd prime p.  Elements are ints in [0, p).

    The modulus is primality-checked on construction; a composite modulus
    is a configuration error, not a silent wrong answer.
    """

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isinstance(p, int) or p < 3:
            raise ConfigurationError(f"prime field modulus must be an odd prime, got {p!r}")
        if not is_prime(p):
            raise ConfigurationError(f"{p} is not prime")
        self.p = p
        self.char = p

    def coerce(self, x) -> int:
        if isinstance(x, bool):
            raise FieldMismatchError("bool is not a field scalar")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            # Only well defined when the denominator is a unit mod p; made
            # explicit so rationals never leak into prime-field containers
            # by accident.
            raise FieldMismatchError(
                f"refusing implicit Fraction -> F_{self.p} conversion; reduce explicitly"
            )
        if isinstance(x, str):
            return int(x) % self.p
        raise FieldMismatchError(f"cannot coerce {x!r} into F_{self.p}")

    def from_rational(self, x: Fraction) -> int:
        """Explicit reduction of a rational with p-unit denominator."""
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p

    def is_element(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def format(self, x) -> str:
        return str(x % self.p)

    def parse(self, s: str):
        return int(s) % self.p

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def random_nonzero(self, rng: random.Random):
        return rng.randrange(1, self.p)

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def require_sampling_prime(field) -> None:
    """Guard for checks whose soundness needs a reasonably large p."""
    if isinstance(field, PrimeField) and field.p < MIN_SAMPLING_PRIME:
        raise ConfigurationError(
            f"prime {field.p} too small for sampling-based checks (need >= {MIN_SAMPLING_PRIME})"
        )
