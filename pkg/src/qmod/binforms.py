"""Homogeneous binary forms with a declared degree.

Coefficient i multiplies s^(d-i) t^i.  The declared degree is part of the
value and is kept even when leading coefficients vanish: a form of declared
degree d with c[d] = 0 has a root at the point at infinity [0:1], and the
squarefree test accounts for its multiplicity d - deg(f(1,t)).
"""

from __future__ import annotations

from .errors import DomainError, FieldMismatchError, ZeroPolynomialError
from . import unipoly


class BinaryForm:
    """Degree-declared homogeneous form in two variables s, t."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree: int, coeffs):
        if degree < 0:
            raise DomainError("binary form degree must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) != degree + 1:
            raise DomainError(
                f"degree-{degree} form needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        for c in coeffs:
            if not field.is_element(c):
                raise FieldMismatchError(f"coefficient {c!r} is not a {field!r} scalar")
        self.field = field
        self.degree = degree
        self.coeffs = [field.coerce(c) for c in coeffs]

    @classmethod
    def zero(cls, field, degree: int) -> "BinaryForm":
        return cls(field, degree, [field.zero] * (degree + 1))

    @classmethod
    def monomial(cls, field, degree: int, i: int) -> "BinaryForm":
        """s^(degree-i) t^i."""
        if not 0 <= i <= degree:
            raise DomainError("monomial index out of range")
        coeffs = [field.zero] * (degree + 1)
        coeffs[i] = field.one
        return cls(field, degree, coeffs)

    @classmethod
    def from_unipoly(cls, field, cs, degree: int) -> "BinaryForm":
        """Homogenize a univariate polynomial in t to declared degree."""
        if unipoly.degree(cs) > degree:
            raise DomainError("declared degree below actual degree")
        coeffs = list(cs) + [field.zero] * (degree + 1 - len(cs))
        return cls(field, degree, coeffs)

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and other.field == self.field
            and other.degree == self.degree
            and other.coeffs == self.coeffs
        )

    def __repr__(self):
        return f"BinaryForm(deg={self.degree}, {self.coeffs})"

    def _require_same_shape(self, other: "BinaryForm"):
        if self.field != other.field:
            raise FieldMismatchError("binary forms over different fields")
        if self.degree != other.degree:
            raise DomainError("binary forms of different declared degrees")

    def add(self, other: "BinaryForm") -> "BinaryForm":
        self._require_same_shape(other)
        F = self.field
        return BinaryForm(
            F, self.degree, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def sub(self, other: "BinaryForm") -> "BinaryForm":
        self._require_same_shape(other)
        F = self.field
        return BinaryForm(
            F, self.degree, [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def scale(self, a) -> "BinaryForm":
        F = self.field
        a = F.coerce(a)
        return BinaryForm(F, self.degree, [F.mul(a, c) for c in self.coeffs])

    def mul(self, other: "BinaryForm") -> "BinaryForm":
        if self.field != other.field:
            raise FieldMismatchError("binary forms over different fields")
        F = self.field
        d = self.degree + other.degree
        out = [F.zero] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return BinaryForm(F, d, out)

    def evaluate(self, s0, t0):
        F = self.field
        s0, t0 = F.coerce(s0), F.coerce(t0)
        d = self.degree
        # Horner in t with the s-powers folded in.
        spow = [F.one]
        for _ in range(d):
            spow.append(F.mul(spow[-1], s0))
        acc = F.zero
        tpow = F.one
        for i, c in enumerate(self.coeffs):
            acc = F.add(acc, F.mul(c, F.mul(spow[d - i], tpow)))
            tpow = F.mul(tpow, t0)
        return acc

    def dehomogenize(self) -> list:
        """f(1, t) as a univariate polynomial in t."""
        return unipoly.normalize(self.field, self.coeffs)

    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root [0:1]; equals the drop from the declared degree."""
        if self.is_zero():
            raise ZeroPolynomialError("infinity multiplicity of the zero form")
        return self.degree - unipoly.degree(self.dehomogenize())

    def squarefree(self) -> bool:
        """Squarefree as a projective binary form, infinity included."""
        if self.is_zero():
            raise ZeroPolynomialError("squarefree test on the zero form")
        if self.infinity_multiplicity() > 1:
            return False
        affine = self.dehomogenize()
        if unipoly.degree(affine) == 0:
            return True
        return unipoly.squarefree_test(self.field, affine)


def multiply_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Convolution product; declared degrees add even when leaders vanish."""
    return f.mul(g)


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Gcd as projective forms: affine gcd plus the shared infinity factor."""
    if f.field != g.field:
        raise FieldMismatchError("binary forms over different fields")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("gcd with an identically-zero form")
    F = f.field
    affine = unipoly.gcd(F, f.dehomogenize(), g.dehomogenize())
    k = min(f.infinity_multiplicity(), g.infinity_multiplicity())
    return BinaryForm.from_unipoly(F, affine, unipoly.degree(affine) + k)


def coprime(f: BinaryForm, g: BinaryForm) -> bool:
    """True when f and g share no projective root."""
    return binary_gcd(f, g).degree == 0
