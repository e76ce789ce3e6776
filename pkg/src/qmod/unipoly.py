"""Dense univariate polynomials over an exact field.

A polynomial is a plain list of scalars, constant term first, with no
trailing zeros; the empty list is the zero polynomial.  Everything is
field-parametrized so the same code serves QQ and F_p.

Scope note: gcd, squarefree testing, resultants and prime-field root
extraction.  Full factorization is deliberately out of scope; the root
finder below only ever splits products of linear factors, which is a
gcd-powered computation.
"""

from __future__ import annotations

from .errors import ConfigurationError, DomainError, ZeroPolynomialError
from .fields import PrimeField
from .linalg import Matrix


def normalize(field, cs) -> list:
    cs = [field.coerce(c) for c in cs]
    while cs and field.is_zero(cs[-1]):
        cs.pop()
    return cs


def degree(cs) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(cs) - 1


def is_zero(cs) -> bool:
    return not cs


def constant(field, c) -> list:
    return normalize(field, [c])


def add(field, f, g) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.add(a, b))
    return normalize(field, out)


def neg(field, f) -> list:
    return [field.neg(c) for c in f]


def sub(field, f, g) -> list:
    return add(field, f, neg(field, g))


def scale(field, a, f) -> list:
    if field.is_zero(a):
        return []
    return [field.mul(a, c) for c in f]


def mul(field, f, g) -> list:
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if field.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(field, out)


def divmod_poly(field, f, g) -> tuple[list, list]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = degree(g)
    lead_inv = field.inv(g[-1])
    q = [field.zero] * max(len(f) - dg, 0)
    while degree(f) >= dg:
        shift = degree(f) - dg
        c = field.mul(f[-1], lead_inv)
        q[shift] = c
        for i in range(dg + 1):
            f[shift + i] = field.sub(f[shift + i], field.mul(c, g[i]))
        while f and field.is_zero(f[-1]):
            f.pop()
    return normalize(field, q), f


def rem(field, f, g) -> list:
    return divmod_poly(field, f, g)[1]


def monic(field, f) -> list:
    if not f:
        return []
    inv = field.inv(f[-1])
    return [field.mul(inv, c) for c in f]


def gcd(field, f, g) -> list:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    f, g = list(f), list(g)
    while g:
        f, g = g, rem(field, f, g)
    return monic(field, f)


def derivative(field, f) -> list:
    out = []
    for i in range(1, len(f)):
        out.append(field.mul(field.coerce(i), f[i]))
    return normalize(field, out)


def evaluate(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def interpolate(field, xs, ys) -> list:
    """Newton-form interpolation through distinct nodes xs."""
    if len(xs) != len(ys):
        raise DomainError("node and value counts differ")
    n = len(xs)
    if n == 0:
        return []
    # Divided differences.
    coeffs = [field.coerce(y) for y in ys]
    xs = [field.coerce(x) for x in xs]
    if len(set(xs)) != n:
        raise DomainError("interpolation nodes must be distinct")
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = field.sub(coeffs[i], coeffs[i - 1])
            den = field.sub(xs[i], xs[i - j])
            coeffs[i] = field.div(num, den)
    poly = []
    for i in range(n - 1, -1, -1):
        poly = mul(field, poly, [field.neg(xs[i]), field.one])
        poly = add(field, poly, [coeffs[i]])
    return poly


def squarefree_test(field, f) -> bool:
    """True iff f has no repeated root in the algebraic closure.

    Test: gcd(f, f') is constant.  Over F_p this characterization needs
    p > deg f, which the run configuration guarantees; it is re-checked
    here because a silent wrong answer would poison every caller.
    """
    f = normalize(field, f)
    if not f:
        raise ZeroPolynomialError("squarefree test on the zero polynomial")
    if isinstance(field, PrimeField) and field.p <= degree(f):
        raise ConfigurationError(
            f"squarefree test needs p > deg f, got p={field.p}, deg={degree(f)}"
        )
    if degree(f) == 0:
        return True
    return degree(gcd(field, f, derivative(field, f))) == 0


def sylvester_matrix(field, f, g, m: int | None = None, n: int | None = None) -> Matrix:
    """Sylvester matrix of f and g with declared degrees m and n.

    Declared degrees default to the actual ones; passing larger values
    builds the structure of a specialization whose leading coefficients
    vanished, which evaluation-interpolation resultants rely on.
    """
    if m is None:
        m = degree(f)
    if n is None:
        n = degree(g)
    if m < 0 or n < 0:
        raise DomainError("Sylvester matrix needs nonzero polynomials")
    if degree(f) > m or degree(g) > n:
        raise DomainError("declared degree below actual degree")
    fc = list(f) + [field.zero] * (m + 1 - len(f))
    gc = list(g) + [field.zero] * (n + 1 - len(g))
    size = m + n
    rows = []
    for i in range(n):
        row = [field.zero] * size
        for j in range(m + 1):
            row[i + j] = fc[m - j]
        rows.append(row)
    for i in range(m):
        row = [field.zero] * size
        for j in range(n + 1):
            row[i + j] = gc[n - j]
        rows.append(row)
    return Matrix(field, size, size, rows, _skip_check=True)


def resultant(field, f, g):
    """Resultant as the Sylvester-matrix determinant.

    Zero iff f and g share a root in the algebraic closure (for nonzero
    inputs).  Degree-zero edge cases follow the usual conventions:
    res(c, d) = 1 for constants, res(c, g) = c^deg(g).
    """
    f = normalize(field, f)
    g = normalize(field, g)
    if not f or not g:
        return field.zero
    m, n = degree(f), degree(g)
    if m == 0 and n == 0:
        return field.one
    if m == 0:
        return _field_pow(field, f[0], n)
    if n == 0:
        return _field_pow(field, g[0], m)
    return sylvester_matrix(field, f, g).det()


def resultant_fixed(field, f, g, m: int, n: int):
    """Determinant of the declared-degree-(m, n) Sylvester matrix."""
    if degree(normalize(field, f)) > m or degree(normalize(field, g)) > n:
        raise DomainError("declared degree below the actual degree")
    if m == 0 and n == 0:
        return field.one
    if m + n > 0 and (not f or not g):
        return field.zero
    return sylvester_matrix(field, f, g, m, n).det()


def resultant_prs(field, f, g):
    """Resultant via the Euclidean remainder sequence (fast path).

    Agrees with the Sylvester determinant; the unit tests hold the two
    routes against each other on random inputs.
    """
    f = normalize(field, f)
    g = normalize(field, g)
    if not f or not g:
        return field.zero
    res = field.one
    sign = 1
    while degree(g) > 0:
        r = rem(field, f, g)
        if not r:
            return field.zero
        if degree(f) * degree(g) % 2 == 1:
            sign = -sign
        res = field.mul(res, _field_pow(field, g[-1], degree(f) - degree(r)))
        f, g = g, r
    res = field.mul(res, _field_pow(field, g[0], degree(f)))
    if sign < 0:
        res = field.neg(res)
    return res


def _field_pow(field, a, e: int):
    acc = field.one
    for _ in range(e):
        acc = field.mul(acc, a)
    return acc


def mul_mod(field, f, g, m) -> list:
    return rem(field, mul(field, f, g), m)


def pow_mod(field, base, e: int, m) -> list:
    """base^e mod m by binary exponentiation."""
    if degree(m) < 1:
        raise DomainError("modulus must have positive degree")
    result = [field.one]
    base = rem(field, base, m)
    while e > 0:
        if e & 1:
            result = mul_mod(field, result, base, m)
        base = mul_mod(field, base, base, m)
        e >>= 1
    return result


def root_multiplicity(field, f, r) -> int:
    """Multiplicity of r as a root of f (0 when not a root)."""
    if not f:
        raise ZeroPolynomialError("root multiplicity in the zero polynomial")
    count = 0
    lin = [field.neg(field.coerce(r)), field.one]
    while True:
        q, rest = divmod_poly(field, f, lin)
        if rest:
            return count
        count += 1
        f = q
        if not f:
            return count


def rational_roots(pf: PrimeField, f) -> list[int]:
    """All roots of f in F_p, sorted, each listed once.

    The F_p-rational part is gcd(f, x^p - x), computed with modular
    exponentiation; it is a product of distinct linear factors and gets
    split by quadratic-residue gcds with a fixed shift sequence, so the
    result is deterministic.
    """
    if not isinstance(pf, PrimeField):
        raise DomainError("rational_roots runs over a prime field")
    f = normalize(pf, f)
    if not f:
        raise ZeroPolynomialError("root extraction from the zero polynomial")
    if degree(f) == 0:
        return []
    xp = pow_mod(pf, [0, 1], pf.p, f)
    linear_part = gcd(pf, f, sub(pf, xp, [0, 1]))
    roots: list[int] = []
    _split_linear(pf, linear_part, roots)
    return sorted(roots)


def _split_linear(pf: PrimeField, g, out: list[int], shift: int = 0) -> None:
    g = monic(pf, g)
    d = degree(g)
    if d <= 0:
        return
    if d == 1:
        out.append(pf.neg(g[0]))
        return
    e = (pf.p - 1) // 2
    a = shift
    while True:
        h = pow_mod(pf, [a % pf.p, 1], e, g)
        h = sub(pf, h, [pf.one])
        part = gcd(pf, g, h)
        if 0 < degree(part) < d:
            _split_linear(pf, part, out, a + 1)
            _split_linear(pf, divmod_poly(pf, g, part)[0], out, a + 1)
            return
        a += 1
