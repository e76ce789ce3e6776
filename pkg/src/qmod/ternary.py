"""Dense homogeneous forms in three variables x, y, z.

Coefficients are stored against the graded-lex monomial list (x > y > z)
of the declared degree; the order is fixed so serialized coefficient
matrices are reproducible bit for bit.  Only what the curve and surface
labs need lives here: products, partials, evaluation and restriction to
lines.  No Groebner machinery.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, FieldMismatchError
from .binforms import BinaryForm


@lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples (i, j, k), i+j+k = degree, in graded-lex order."""
    if degree < 0:
        raise DomainError("degree must be nonnegative")
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict[tuple[int, int, int], int]:
    return {e: n for n, e in enumerate(monomials(degree))}


def monomial_count(degree: int) -> int:
    return (degree + 1) * (degree + 2) // 2


@lru_cache(maxsize=None)
def _product_table(d1: int, d2: int) -> tuple[tuple[int, int, int], ...]:
    """(index1, index2, output index) triples for a degree d1 * d2 product."""
    idx = monomial_index(d1 + d2)
    table = []
    for n1, (i1, j1, k1) in enumerate(monomials(d1)):
        for n2, (i2, j2, k2) in enumerate(monomials(d2)):
            table.append((n1, n2, idx[(i1 + i2, j1 + j2, k1 + k2)]))
    return tuple(table)


class TernaryForm:
    """Homogeneous form of a declared degree in x, y, z."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree: int, coeffs, *, _skip_check=False):
        coeffs = list(coeffs)
        if len(coeffs) != monomial_count(degree):
            raise DomainError(
                f"degree-{degree} form needs {monomial_count(degree)} coefficients"
            )
        if not _skip_check:
            for c in coeffs:
                if not field.is_element(c):
                    raise FieldMismatchError(f"coefficient {c!r} is not a {field!r} scalar")
            coeffs = [field.coerce(c) for c in coeffs]
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def zero(cls, field, degree: int) -> "TernaryForm":
        return cls(field, degree, [field.zero] * monomial_count(degree), _skip_check=True)

    @classmethod
    def from_dict(cls, field, degree: int, terms: dict) -> "TernaryForm":
        coeffs = [field.zero] * monomial_count(degree)
        idx = monomial_index(degree)
        for e, c in terms.items():
            if sum(e) != degree:
                raise DomainError(f"exponent {e} does not have degree {degree}")
            coeffs[idx[tuple(e)]] = field.coerce(c)
        return cls(field, degree, coeffs, _skip_check=True)

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, TernaryForm)
            and other.field == self.field
            and other.degree == self.degree
            and other.coeffs == self.coeffs
        )

    def __repr__(self):
        return f"TernaryForm(deg={self.degree})"

    def add(self, other: "TernaryForm") -> "TernaryForm":
        if self.field != other.field or self.degree != other.degree:
            raise DomainError("ternary form shape mismatch")
        F = self.field
        return TernaryForm(
            F, self.degree,
            [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
            _skip_check=True,
        )

    def sub(self, other: "TernaryForm") -> "TernaryForm":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, a) -> "TernaryForm":
        F = self.field
        a = F.coerce(a)
        return TernaryForm(F, self.degree, [F.mul(a, c) for c in self.coeffs], _skip_check=True)

    def mul(self, other: "TernaryForm") -> "TernaryForm":
        if self.field != other.field:
            raise FieldMismatchError("ternary forms over different fields")
        F = self.field
        out = [F.zero] * monomial_count(self.degree + other.degree)
        a, b = self.coeffs, other.coeffs
        for n1, n2, no in _product_table(self.degree, other.degree):
            c1 = a[n1]
            if F.is_zero(c1):
                continue
            c2 = b[n2]
            if F.is_zero(c2):
                continue
            out[no] = F.add(out[no], F.mul(c1, c2))
        return TernaryForm(F, self.degree + other.degree, out, _skip_check=True)

    def partial(self, var: int) -> "TernaryForm":
        """Partial derivative; var is 0, 1, 2 for x, y, z."""
        if self.degree == 0:
            raise DomainError("partial of a degree-0 form is not a form")
        F = self.field
        out = [F.zero] * monomial_count(self.degree - 1)
        idx = monomial_index(self.degree - 1)
        for e, c in zip(monomials(self.degree), self.coeffs):
            if F.is_zero(c) or e[var] == 0:
                continue
            low = list(e)
            low[var] -= 1
            out[idx[tuple(low)]] = F.mul(F.coerce(e[var]), c)
        return TernaryForm(F, self.degree - 1, out, _skip_check=True)

    def evaluate(self, x0, y0, z0):
        F = self.field
        x0, y0, z0 = F.coerce(x0), F.coerce(y0), F.coerce(z0)
        px = _powers(F, x0, self.degree)
        py = _powers(F, y0, self.degree)
        pz = _powers(F, z0, self.degree)
        acc = F.zero
        for (i, j, k), c in zip(monomials(self.degree), self.coeffs):
            if F.is_zero(c):
                continue
            acc = F.add(acc, F.mul(c, F.mul(px[i], F.mul(py[j], pz[k]))))
        return acc

    def eval_fix_xz(self, x0, z0) -> list:
        """Coefficients in y after substituting x = x0, z = z0 (dense, padded)."""
        F = self.field
        x0, z0 = F.coerce(x0), F.coerce(z0)
        px = _powers(F, x0, self.degree)
        pz = _powers(F, z0, self.degree)
        out = [F.zero] * (self.degree + 1)
        for (i, j, k), c in zip(monomials(self.degree), self.coeffs):
            if F.is_zero(c):
                continue
            out[j] = F.add(out[j], F.mul(c, F.mul(px[i], pz[k])))
        return out

    def eval_fix_yz(self, y0, z0) -> list:
        """Coefficients in x after substituting y = y0, z = z0 (dense, padded)."""
        F = self.field
        y0, z0 = F.coerce(y0), F.coerce(z0)
        py = _powers(F, y0, self.degree)
        pz = _powers(F, z0, self.degree)
        out = [F.zero] * (self.degree + 1)
        for (i, j, k), c in zip(monomials(self.degree), self.coeffs):
            if F.is_zero(c):
                continue
            out[i] = F.add(out[i], F.mul(c, F.mul(py[j], pz[k])))
        return out

    def restrict_z0(self) -> BinaryForm:
        """Restriction to the line z = 0 as a binary form in (x, y)."""
        F = self.field
        d = self.degree
        coeffs = [F.zero] * (d + 1)
        idx = monomial_index(d)
        for j in range(d + 1):
            coeffs[j] = self.coeffs[idx[(d - j, j, 0)]]
        return BinaryForm(F, d, coeffs)

    def restrict_to_line(self, p0, p1) -> BinaryForm:
        """Pull back along s*p0 + t*p1 as a binary form of the same degree."""
        F = self.field
        d = self.degree
        lin = [BinaryForm(F, 1, [F.coerce(p0[v]), F.coerce(p1[v])]) for v in range(3)]
        pw = []
        for v in range(3):
            powers = [BinaryForm(F, 0, [F.one])]
            for _ in range(d):
                powers.append(powers[-1].mul(lin[v]))
            pw.append(powers)
        acc = BinaryForm.zero(F, d)
        for (i, j, k), c in zip(monomials(d), self.coeffs):
            if F.is_zero(c):
                continue
            term = pw[0][i].mul(pw[1][j]).mul(pw[2][k])
            acc = acc.add(term.scale(c))
        return acc

    def to_json_list(self) -> list[str]:
        F = self.field
        return [F.format(c) for c in self.coeffs]


def _powers(field, a, n: int) -> list:
    out = [field.one]
    for _ in range(n):
        out.append(field.mul(out[-1], a))
    return out
