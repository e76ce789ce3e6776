"""Quadrics through parametrized rational curves.

Curves live in projective r-space as tuples of binary forms, quadrics as
symmetric matrices.  The ideal-of-quadrics computation is exact by degree
counting: a binary form of degree 2d vanishing at 2d + 1 parameter values
is zero, so no Groebner machinery is needed.  Randomness enters only where
genericity is itself the question, always through seeded derived streams
with a bounded resample-and-report protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import unipoly
from .binforms import BinaryForm, binary_gcd
from .errors import ConfigurationError, DomainError, InternalCheckError
from .fields import DEFAULT_PRIME, PrimeField, derived_rng, require_sampling_prime
from .linalg import Matrix
from .ternary import TernaryForm


@lru_cache(maxsize=None)
def upper_pairs(size: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j) with i <= j in row-major order.

    This is the flattening order shared by quadratic-form coefficient
    vectors and symmetric-matrix upper triangles everywhere below.
    """
    return tuple((i, j) for i in range(size) for j in range(i, size))


class SymQuadric:
    """Symmetric matrix representing a quadric hypersurface."""

    __slots__ = ("field", "size", "entries")

    def __init__(self, field, entries, *, _skip_check=False):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("quadric matrix must be square")
        if not _skip_check:
            for i in range(n):
                for j in range(n):
                    if not field.is_element(rows[i][j]):
                        rows[i][j] = field.coerce(rows[i][j])
            for i in range(n):
                for j in range(i + 1, n):
                    if rows[i][j] != rows[j][i]:
                        raise DomainError("quadric matrix must be symmetric")
        self.field = field
        self.size = n
        self.entries = rows

    @classmethod
    def zero(cls, field, size: int) -> "SymQuadric":
        z = field.zero
        return cls(field, [[z] * size for _ in range(size)], _skip_check=True)

    @classmethod
    def from_upper_coeffs(cls, field, size: int, coeffs) -> "SymQuadric":
        """Build from quadratic-form coefficients in upper_pairs order.

        Off-diagonal form coefficients split in half between the two
        matrix slots, so the field characteristic must not be 2; the
        field layer already refuses p = 2.
        """
        coeffs = list(coeffs)
        pairs = upper_pairs(size)
        if len(coeffs) != len(pairs):
            raise DomainError(
                f"expected {len(pairs)} coefficients for size {size}, got {len(coeffs)}"
            )
        half = field.inv(field.coerce(2))
        z = field.zero
        m = [[z] * size for _ in range(size)]
        for (i, j), c in zip(pairs, coeffs):
            c = field.coerce(c)
            if i == j:
                m[i][i] = c
            else:
                m[i][j] = m[j][i] = field.mul(half, c)
        return cls(field, m, _skip_check=True)

    def upper_coeffs(self) -> list:
        """Quadratic-form coefficients, inverse of from_upper_coeffs."""
        out = []
        for i, j in upper_pairs(self.size):
            if i == j:
                out.append(self.entries[i][i])
            else:
                out.append(self.field.add(self.entries[i][j], self.entries[i][j]))
        return out

    def evaluate(self, point):
        """Value of the quadratic form x^T M x at an affine representative."""
        point = [self.field.coerce(x) for x in point]
        if len(point) != self.size:
            raise DomainError("point length must match the matrix size")
        f = self.field
        acc = f.zero
        for i in range(self.size):
            row = self.entries[i]
            s = f.zero
            for j in range(self.size):
                s = f.add(s, f.mul(row[j], point[j]))
            acc = f.add(acc, f.mul(point[i], s))
        return acc

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.size, self.size,
                      [row[:] for row in self.entries], _skip_check=True)

    def rank(self) -> int:
        return self.matrix().rank()

    def _require_same_shape(self, other: "SymQuadric") -> None:
        if self.field != other.field:
            raise DomainError("quadrics live over different fields")
        if self.size != other.size:
            raise DomainError(f"size mismatch: {self.size} vs {other.size}")

    def add(self, other: "SymQuadric") -> "SymQuadric":
        self._require_same_shape(other)
        f = self.field
        return SymQuadric(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                              for r1, r2 in zip(self.entries, other.entries)],
                          _skip_check=True)

    def sub(self, other: "SymQuadric") -> "SymQuadric":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, a) -> "SymQuadric":
        f = self.field
        a = f.coerce(a)
        return SymQuadric(f, [[f.mul(a, x) for x in row] for row in self.entries],
                          _skip_check=True)

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, SymQuadric):
            return NotImplemented
        return (self.field == other.field and self.size == other.size
                and self.entries == other.entries)

    def __repr__(self):
        return f"SymQuadric(size={self.size})"

    def to_json_dict(self) -> dict:
        fmt = self.field.format
        return {"size": self.size,
                "entries": [[fmt(x) for x in row] for row in self.entries]}


def linear_combination(field, quadrics, coeffs) -> SymQuadric:
    if len(quadrics) != len(coeffs):
        raise DomainError("one coefficient per quadric required")
    if not quadrics:
        raise DomainError("empty combination has no ambient size")
    acc = SymQuadric.zero(field, quadrics[0].size)
    for q, c in zip(quadrics, coeffs):
        acc = acc.add(q.scale(c))
    return acc


class QuadricSystem:
    """A linearly independent family of quadrics in one ambient space."""

    __slots__ = ("field", "r", "basis")

    def __init__(self, field, r: int, basis):
        basis = list(basis)
        for q in basis:
            if q.field != field:
                raise DomainError("system members must share the field")
            if q.size != r + 1:
                raise DomainError("system members must share the ambient space")
        if basis:
            rows = [q.upper_coeffs() for q in basis]
            m = Matrix(field, len(rows), len(upper_pairs(r + 1)), rows,
                       _skip_check=True)
            if m.rank() != len(basis):
                raise DomainError("system basis is linearly dependent")
        self.field = field
        self.r = r
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def members(self) -> list[SymQuadric]:
        return list(self.basis)

    def coordinates(self, q: SymQuadric) -> list | None:
        """Coefficients expressing q over the basis, or None if outside."""
        if q.field != self.field or q.size != self.r + 1:
            raise DomainError("quadric does not live in this system's space")
        if not self.basis:
            return [] if q.is_zero() else None
        cols = [b.upper_coeffs() for b in self.basis]
        n = len(cols[0])
        m = Matrix(self.field, n, len(cols),
                   [[cols[j][i] for j in range(len(cols))] for i in range(n)],
                   _skip_check=True)
        return m.solve(q.upper_coeffs())

    def contains(self, q: SymQuadric) -> bool:
        return self.coordinates(q) is not None

    def evaluate_all(self, point) -> list:
        return [q.evaluate(point) for q in self.basis]

    def to_json_dict(self) -> dict:
        return {"r": self.r, "dim": self.dim,
                "basis": [q.to_json_dict() for q in self.basis]}


class ParamCurve:
    """A rational curve in projective r-space: r + 1 binary forms of one
    common degree, with no common projective root."""

    __slots__ = ("field", "r", "degree", "components")

    def __init__(self, field, r: int, components, *, _trusted=False):
        components = list(components)
        if r < 1:
            raise DomainError("ambient projective space needs r >= 1")
        if len(components) != r + 1:
            raise DomainError(f"expected {r + 1} components, got {len(components)}")
        d = components[0].degree
        for comp in components:
            if comp.field != field:
                raise DomainError("curve components must share the field")
            if comp.degree != d:
                raise DomainError("curve components must share one degree")
        if d < 1:
            raise DomainError("curve degree must be positive")
        self.field = field
        self.r = r
        self.degree = d
        self.components = components
        if not _trusted:
            self._check_no_common_root()

    def _check_no_common_root(self):
        # A common root of the components survives into every linear
        # combination, so two random combinations expose it through their
        # projective gcd.  Retries shed accidental shared roots of the
        # combinations themselves; five misses in a row mean the common
        # root is real.
        rng = derived_rng(0, "curve-common-root", self.r, self.degree)
        for _ in range(5):
            c1 = self._random_combination(rng)
            c2 = self._random_combination(rng)
            if c1.is_zero() or c2.is_zero():
                continue
            if binary_gcd(c1, c2).degree == 0:
                return
        raise DomainError("curve components appear to share a projective root")

    def _random_combination(self, rng) -> BinaryForm:
        acc = BinaryForm.zero(self.field, self.degree)
        for comp in self.components:
            acc = acc.add(comp.scale(self.field.random_element(rng)))
        return acc

    @classmethod
    def rational_normal(cls, field, r: int) -> "ParamCurve":
        """The degree-r monomial curve; s^r and t^r rule out common roots."""
        comps = [BinaryForm.monomial(field, r, i) for i in range(r + 1)]
        return cls(field, r, comps, _trusted=True)

    def is_monomial_basis(self) -> bool:
        if self.degree != self.r:
            return False
        return all(comp == BinaryForm.monomial(self.field, self.r, i)
                   for i, comp in enumerate(self.components))

    def evaluate(self, t) -> list:
        """Affine-chart point c(1, t) as a coordinate list."""
        t = self.field.coerce(t)
        one = self.field.one
        return [comp.evaluate(one, t) for comp in self.components]

    def to_json_dict(self) -> dict:
        fmt = self.field.format
        return {"r": self.r, "degree": self.degree,
                "components": [[fmt(c) for c in comp.coeffs]
                               for comp in self.components]}


def i2_basis(c: ParamCurve) -> QuadricSystem:
    """Quadrics vanishing on the curve, computed exactly by evaluation.

    A quadric restricted to the curve is a binary form of degree 2d, so
    vanishing at the 2d + 1 parameter values t = 0 .. 2d forces vanishing
    identically.  Over a prime field this needs p > 2d distinct nodes.
    """
    if c.r < 3:
        raise DomainError("quadric systems need ambient dimension r >= 3")
    field = c.field
    if isinstance(field, PrimeField) and field.p <= 2 * c.degree:
        raise ConfigurationError(
            f"need p > {2 * c.degree} evaluation nodes, prime {field.p} is too small"
        )
    pairs = upper_pairs(c.r + 1)
    rows = []
    for t in range(2 * c.degree + 1):
        pt = c.evaluate(t)
        rows.append([field.mul(pt[i], pt[j]) for (i, j) in pairs])
    kern = Matrix(field, len(rows), len(pairs), rows, _skip_check=True).kernel_basis()
    quads = [SymQuadric.from_upper_coeffs(field, c.r + 1, v) for v in kern]
    return QuadricSystem(field, c.r, quads)


def rnc_i2_dim(r: int) -> int:
    """Expected quadric count for the degree-r monomial curve."""
    if r < 3:
        raise DomainError("quadric systems need ambient dimension r >= 3")
    return r * (r - 1) // 2


@dataclass(frozen=True)
class PencilDecomposition:
    """Input data for the bounded-rank quadric constructions.

    One pencil (f, g) is always present; the second pencil (u, v) appears
    only in the rank-4 shape; h is the residual common factor.
    """

    f: BinaryForm
    g: BinaryForm
    u: BinaryForm | None
    v: BinaryForm | None
    h: BinaryForm

    def __post_init__(self):
        if self.f.degree != self.g.degree:
            raise DomainError("pencil members f and g must share a degree")
        if (self.u is None) != (self.v is None):
            raise DomainError("second pencil needs both u and v or neither")
        if self.u is not None and self.u.degree != self.v.degree:
            raise DomainError("pencil members u and v must share a degree")
        fields = {self.f.field, self.g.field, self.h.field}
        if self.u is not None:
            fields |= {self.u.field, self.v.field}
        if len(fields) != 1:
            raise DomainError("decomposition members must share the field")

    @property
    def kind(self) -> int:
        return 3 if self.u is None else 4

    @classmethod
    def rank3(cls, f: BinaryForm, g: BinaryForm, h: BinaryForm) -> "PencilDecomposition":
        return cls(f, g, None, None, h)

    @classmethod
    def rank4(cls, f, g, u, v, h) -> "PencilDecomposition":
        return cls(f, g, u, v, h)


def _require_monomial_curve(c: ParamCurve):
    if not c.is_monomial_basis():
        raise DomainError("construction is written against the monomial curve")


def _pencil_quadric(field, a, b, c, d) -> SymQuadric:
    # Matrix of the form l(a)l(b) - l(c)l(d), where l sends a coefficient
    # list to the linear form with those coefficients.
    n = len(a)
    half = field.inv(field.coerce(2))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            pos = field.add(field.mul(a[i], b[j]), field.mul(a[j], b[i]))
            neg = field.add(field.mul(c[i], d[j]), field.mul(c[j], d[i]))
            row.append(field.mul(half, field.sub(pos, neg)))
        rows.append(row)
    return SymQuadric(field, rows, _skip_check=True)


def rank3_from_decomposition(pd: PencilDecomposition, c: ParamCurve) -> SymQuadric:
    """The quadric l(f*f*h) l(g*g*h) - l(f*g*h)^2 on the monomial curve.

    It vanishes on the curve because the three products satisfy the same
    multiplicative identity as the linear forms pulled back, and its
    matrix has rank at most 3 by construction.
    """
    if pd.kind != 3:
        raise DomainError("decomposition carries a second pencil; rank-3 shape has none")
    _require_monomial_curve(c)
    if 2 * pd.f.degree + pd.h.degree != c.degree:
        raise DomainError("component degrees must satisfy 2 deg f + deg h = curve degree")
    if pd.f.degree < 1:
        raise DomainError("pencil degree must be at least 1")
    fh = pd.f.mul(pd.h)
    u = pd.f.mul(fh)
    v = pd.g.mul(pd.g.mul(pd.h))
    w = pd.g.mul(fh)
    if u.mul(v) != w.mul(w):
        raise InternalCheckError("rank-3 product identity failed")
    q = _pencil_quadric(c.field, u.coeffs, v.coeffs, w.coeffs, w.coeffs)
    if q.rank() > 3:
        raise InternalCheckError("rank-3 construction exceeded rank 3")
    return q


def rank4_from_decomposition(pd: PencilDecomposition, c: ParamCurve) -> SymQuadric:
    """The quadric l(fuh) l(gvh) - l(fvh) l(guh) on the monomial curve.

    Rank is at most 4; it degenerates to zero when f = g or u = v, and to
    the rank-3 quadric of (f, g, h) when (u, v) = (f, g).
    """
    if pd.kind != 4:
        raise DomainError("rank-4 shape needs a second pencil")
    _require_monomial_curve(c)
    if pd.f.degree + pd.u.degree + pd.h.degree != c.degree:
        raise DomainError(
            "component degrees must satisfy deg f + deg u + deg h = curve degree")
    if pd.f.degree < 1 or pd.u.degree < 1:
        raise DomainError("pencil degrees must be at least 1")
    uh = pd.u.mul(pd.h)
    vh = pd.v.mul(pd.h)
    a = pd.f.mul(uh)
    b = pd.g.mul(vh)
    cc = pd.f.mul(vh)
    dd = pd.g.mul(uh)
    if a.mul(b) != cc.mul(dd):
        raise InternalCheckError("rank-4 product identity failed")
    q = _pencil_quadric(c.field, a.coeffs, b.coeffs, cc.coeffs, dd.coeffs)
    if q.rank() > 4:
        raise InternalCheckError("rank-4 construction exceeded rank 4")
    return q


def _rank3_shape(r: int, x: int) -> int:
    if x < 0 or (r - x) % 2 != 0 or r - x < 2:
        raise DomainError(f"empty stratum: no rank-3 shape with r={r}, x={x}")
    return (r - x) // 2


def _rank4_shape(r: int, stratum) -> tuple[int, int, int]:
    try:
        m, mp, x = (int(v) for v in stratum)
    except (TypeError, ValueError):
        raise DomainError("rank-4 stratum is a triple (deg f, deg u, deg h)") from None
    if m < 1 or mp < 1 or x < 0 or m + mp + x != r:
        raise DomainError(f"empty stratum: no rank-4 shape with r={r}, stratum={stratum}")
    if m + mp < 3:
        # With both pencils linear the four cross products live in the
        # 3-dimensional space of quadratics, so the quadric never
        # reaches rank 4; the shape is a disguised rank-3 one.
        raise DomainError(f"empty stratum: pencil degrees {m}+{mp} give rank <= 3")
    return m, mp, x


def rank3_strata(r: int) -> list[int]:
    """Legal residual degrees x for the rank-3 shape in P^r."""
    return [x for x in range(r - 2, -1, -2)]


def rank4_strata(r: int) -> list[tuple[int, int, int]]:
    """Legal (deg f, deg u, deg h) triples for the rank-4 shape in P^r."""
    out = []
    for m in range(1, r - 1):
        for mp in range(max(1, 3 - m), r - m + 1):
            x = r - m - mp
            if x >= 0:
                out.append((m, mp, x))
    return out


def _random_form(field, degree: int, rng) -> BinaryForm:
    return BinaryForm(field, degree, [field.random_element(rng)
                                      for _ in range(degree + 1)])


def random_rank3_decomposition(field, r: int, x: int, rng) -> PencilDecomposition:
    m = _rank3_shape(r, x)
    return PencilDecomposition.rank3(
        _random_form(field, m, rng), _random_form(field, m, rng),
        _random_form(field, x, rng))


def random_rank4_decomposition(field, r: int, stratum, rng) -> PencilDecomposition:
    m, mp, x = _rank4_shape(r, stratum)
    return PencilDecomposition.rank4(
        _random_form(field, m, rng), _random_form(field, m, rng),
        _random_form(field, mp, rng), _random_form(field, mp, rng),
        _random_form(field, x, rng))


def _sym_entry(field, a, b, i: int, j: int):
    # Coefficient of x_i x_j in the product form l(a) l(b).
    if i == j:
        return field.mul(a[i], b[i])
    return field.add(field.mul(a[i], b[j]), field.mul(a[j], b[i]))


def _combo_row(field, pairs, terms) -> list:
    # terms: (integer weight, coeff list, coeff list) triples; the row is
    # the weighted sum of product forms, flattened in upper_pairs order.
    weights = [field.coerce(w) for (w, _, _) in terms]
    row = []
    for i, j in pairs:
        acc = field.zero
        for w, (_, a, b) in zip(weights, terms):
            acc = field.add(acc, field.mul(w, _sym_entry(field, a, b, i, j)))
        row.append(acc)
    return row


def _rank3_jacobian_rows(field, r: int, pd: PencilDecomposition) -> list[list]:
    f, g, h = pd.f, pd.g, pd.h
    fh, gh = f.mul(h), g.mul(h)
    u = f.mul(fh)
    v = g.mul(gh)
    w = g.mul(fh)
    pairs = upper_pairs(r + 1)
    rows = []
    for j in range(f.degree + 1):
        e = BinaryForm.monomial(field, f.degree, j)
        rows.append(_combo_row(field, pairs, [
            (2, e.mul(fh).coeffs, v.coeffs),
            (-2, e.mul(gh).coeffs, w.coeffs)]))
    for j in range(g.degree + 1):
        e = BinaryForm.monomial(field, g.degree, j)
        rows.append(_combo_row(field, pairs, [
            (2, u.coeffs, e.mul(gh).coeffs),
            (-2, e.mul(fh).coeffs, w.coeffs)]))
    for j in range(h.degree + 1):
        e = BinaryForm.monomial(field, h.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, e.mul(f.mul(f)).coeffs, v.coeffs),
            (1, u.coeffs, e.mul(g.mul(g)).coeffs),
            (-2, e.mul(f.mul(g)).coeffs, w.coeffs)]))
    return rows


def _rank4_jacobian_rows(field, r: int, pd: PencilDecomposition) -> list[list]:
    f, g, u, v, h = pd.f, pd.g, pd.u, pd.v, pd.h
    fh, gh = f.mul(h), g.mul(h)
    uh, vh = u.mul(h), v.mul(h)
    a = f.mul(uh)
    b = g.mul(vh)
    c = f.mul(vh)
    d = g.mul(uh)
    pairs = upper_pairs(r + 1)
    rows = []
    for j in range(f.degree + 1):
        e = BinaryForm.monomial(field, f.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, e.mul(uh).coeffs, b.coeffs),
            (-1, e.mul(vh).coeffs, d.coeffs)]))
    for j in range(g.degree + 1):
        e = BinaryForm.monomial(field, g.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, a.coeffs, e.mul(vh).coeffs),
            (-1, c.coeffs, e.mul(uh).coeffs)]))
    for j in range(u.degree + 1):
        e = BinaryForm.monomial(field, u.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, e.mul(fh).coeffs, b.coeffs),
            (-1, c.coeffs, e.mul(gh).coeffs)]))
    for j in range(v.degree + 1):
        e = BinaryForm.monomial(field, v.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, a.coeffs, e.mul(gh).coeffs),
            (-1, e.mul(fh).coeffs, d.coeffs)]))
    for j in range(h.degree + 1):
        e = BinaryForm.monomial(field, h.degree, j)
        rows.append(_combo_row(field, pairs, [
            (1, e.mul(f.mul(u)).coeffs, b.coeffs),
            (1, a.coeffs, e.mul(g.mul(v)).coeffs),
            (-1, e.mul(f.mul(v)).coeffs, d.coeffs),
            (-1, c.coeffs, e.mul(g.mul(u)).coeffs)]))
    return rows


def expected_family_dim(r: int, k: int, stratum) -> int:
    """Projective dimension each stratum should reach, by parameter count
    minus the generic stabilizer of the construction.

    Rank 3: r + 3 parameters, a 4-dimensional stabilizer (pencil changes
    of basis and the residual scale acting with cancelling determinant
    twists), so r - 2 projectively.  Rank 4: 2r - x + 5 parameters and an
    8-dimensional stabilizer, so 2r - x - 4.
    """
    if k == 3:
        _rank3_shape(r, int(stratum))
        return r - 2
    if k == 4:
        _, _, x = _rank4_shape(r, stratum)
        return 2 * r - x - 4
    raise DomainError("rank bound must be 3 or 4")


def family_dimension(r: int, k: int, stratum, *, field=None, seed: int = 0) -> int:
    """Projective dimension of a bounded-rank stratum, measured as the
    generic Jacobian rank of its parametrization minus 1.

    The rank is evaluated at a random parameter point; three independent
    draws are taken and the maximum kept, since a special point can only
    drop the rank.
    """
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    require_sampling_prime(field)
    if k == 3:
        x = int(stratum)
        _rank3_shape(r, x)
        labels = (3, r, x)
    elif k == 4:
        m, mp, x = _rank4_shape(r, stratum)
        labels = (4, r, m, mp, x)
    else:
        raise DomainError("rank bound must be 3 or 4")
    ncols = len(upper_pairs(r + 1))
    best = 0
    for attempt in range(3):
        rng = derived_rng(seed, "family-dim", *labels, attempt)
        if k == 3:
            pd = random_rank3_decomposition(field, r, x, rng)
            rows = _rank3_jacobian_rows(field, r, pd)
        else:
            pd = random_rank4_decomposition(field, r, (m, mp, x), rng)
            rows = _rank4_jacobian_rows(field, r, pd)
        rank = Matrix(field, len(rows), ncols, rows, _skip_check=True).rank()
        best = max(best, rank - 1)
    return best


def secant_condition(c: ParamCurve, t1, t2, *, system: QuadricSystem | None = None) -> int:
    """Codimension cut in I2 by vanishing on the chord through c(t1), c(t2).

    A quadric in the system already vanishes at the two chord points, so
    vanishing at the third point p1 + p2 is vanishing on the whole line.
    The answer is 0 or 1; 1 is the generic value.
    """
    field = c.field
    t1 = field.coerce(t1)
    t2 = field.coerce(t2)
    if t1 == t2:
        raise DomainError("secant needs two distinct parameter values")
    if system is None:
        system = i2_basis(c)
    p1 = c.evaluate(t1)
    p2 = c.evaluate(t2)
    if Matrix.from_rows(field, [p1, p2]).rank() < 2:
        raise DomainError("parameter values give proportional points")
    p3 = [field.add(a, b) for a, b in zip(p1, p2)]
    vals = system.evaluate_all(p3)
    return 0 if all(field.is_zero(v) for v in vals) else 1


def cone_quadric(q: SymQuadric, extra: int) -> SymQuadric:
    """Extend by cone directions: zero rows and columns appended."""
    if extra < 0:
        raise DomainError("cone extension count must be nonnegative")
    f = q.field
    n = q.size + extra
    z = f.zero
    rows = [[z] * n for _ in range(n)]
    for i in range(q.size):
        for j in range(q.size):
            rows[i][j] = q.entries[i][j]
    return SymQuadric(f, rows, _skip_check=True)


def project_quadric(q: SymQuadric, drop: int) -> SymQuadric:
    """Delete the last drop coordinates; legal only when every deleted
    entry is zero, so rank is preserved exactly."""
    if drop < 0 or drop > q.size:
        raise DomainError("cannot drop more coordinates than the matrix has")
    keep = q.size - drop
    f = q.field
    for i in range(q.size):
        for j in range(q.size):
            if (i >= keep or j >= keep) and not f.is_zero(q.entries[i][j]):
                raise DomainError("projection would discard a nonzero coefficient")
    return SymQuadric(f, [row[:keep] for row in q.entries[:keep]], _skip_check=True)


def _random_sym_quadric(field, size: int, rng) -> SymQuadric:
    z = field.zero
    rows = [[z] * size for _ in range(size)]
    for i, j in upper_pairs(size):
        a = field.random_element(rng)
        rows[i][j] = a
        rows[j][i] = a
    return SymQuadric(field, rows, _skip_check=True)


def genus4_check(seed: int, field=None) -> int:
    """Rank of a random symmetric 4 by 4 matrix.

    The quadric through a canonical genus-4 curve is unique; for a general
    curve it is smooth, so the expected rank is 4 and rank 3 or less
    witnesses a cone.
    """
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    require_sampling_prime(field)
    rng = derived_rng(seed, "genus4")
    return _random_sym_quadric(field, 4, rng).rank()


def form_matrix_det(entries, unit):
    """Determinant of a square matrix of forms, DP over column subsets.

    Works for any entry type with add, mul, and scale; unit is the
    multiplicative identity of that type.  Column-subset minors are built
    one row at a time, so the work is 2^n small form products instead of
    n! expansion terms.
    """
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return unit
    field = unit.field
    minus_one = field.neg(field.one)
    states = {0: unit}
    for row in range(n):
        nxt: dict = {}
        for mask, minor in states.items():
            below = 0
            for j in range(n):
                if mask >> j & 1:
                    below += 1
                    continue
                term = entries[row][j].mul(minor)
                if below % 2 == 1:
                    term = term.scale(minus_one)
                key = mask | (1 << j)
                if key in nxt:
                    nxt[key] = nxt[key].add(term)
                else:
                    nxt[key] = term
        states = nxt
    return states[(1 << n) - 1]


def net_discriminant(q1: SymQuadric, q2: SymQuadric, q3: SymQuadric) -> TernaryForm:
    """det(x Q1 + y Q2 + z Q3) as a ternary form of degree = matrix size."""
    if not (q1.size == q2.size == q3.size):
        raise DomainError("net members must share the ambient space")
    if not (q1.field == q2.field == q3.field):
        raise DomainError("net members must share the field")
    field = q1.field
    n = q1.size
    lin = [[TernaryForm(field, 1,
                        [q1.entries[i][j], q2.entries[i][j], q3.entries[i][j]])
            for j in range(n)] for i in range(n)]
    return form_matrix_det(lin, TernaryForm(field, 0, [field.one]))


@dataclass(frozen=True)
class Genus5Report:
    """Outcome of one net-of-quadrics smoothness check."""

    seed: int
    prime: int
    attempts: int
    attempt_used: int
    discriminant_nonzero: bool
    line_squarefree: bool
    candidates: tuple
    low_rank_points: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "prime": self.prime,
            "attempts": self.attempts,
            "attempt_used": self.attempt_used,
            "discriminant_nonzero": self.discriminant_nonzero,
            "line_squarefree": self.line_squarefree,
            "candidates": [{"point": list(pt), "rank": rk}
                           for (pt, rk) in self.candidates],
            "low_rank_points": self.low_rank_points,
            "passed": self.passed,
        }


def _random_line_squarefree(field, disc: TernaryForm, rng) -> bool | None:
    # Restriction to a line through two random points; None on a
    # degenerate draw (proportional points or a line inside the curve).
    for _ in range(5):
        p0 = [field.random_element(rng) for _ in range(3)]
        p1 = [field.random_element(rng) for _ in range(3)]
        cross = [
            field.sub(field.mul(p0[1], p1[2]), field.mul(p0[2], p1[1])),
            field.sub(field.mul(p0[2], p1[0]), field.mul(p0[0], p1[2])),
            field.sub(field.mul(p0[0], p1[1]), field.mul(p0[1], p1[0])),
        ]
        if all(field.is_zero(x) for x in cross):
            continue
        restricted = disc.restrict_to_line(p0, p1)
        if restricted.is_zero():
            continue
        return restricted.squarefree()
    return None


def _singular_candidates(field, disc: TernaryForm, qs) -> list | None:
    """Rational singular-point candidates of the discriminant curve, by
    resultant elimination of two partial derivatives.

    Candidates is a superset of the rational singular points: a rank-3
    point of the net forces the adjugate to vanish, hence every partial
    of the determinant, hence membership in both eliminated loci.  None
    signals a degenerate configuration that wants a fresh net.
    """
    d1 = disc.partial(0)
    d2 = disc.partial(1)
    deg = disc.degree - 1
    bound = 2 * deg * deg
    nodes = [field.coerce(a) for a in range(bound + 1)]
    vals = []
    for a in nodes:
        f1 = d1.eval_fix_xz(a, field.one)
        f2 = d2.eval_fix_xz(a, field.one)
        vals.append(unipoly.resultant_fixed(field, f1, f2, deg, deg))
    elim = unipoly.interpolate(field, nodes, vals)
    if unipoly.is_zero(elim):
        return None
    out = []
    for a0 in unipoly.rational_roots(field, elim):
        f1 = unipoly.normalize(field, d1.eval_fix_xz(a0, field.one))
        f2 = unipoly.normalize(field, d2.eval_fix_xz(a0, field.one))
        if not f1 and not f2:
            return None
        if not f1:
            common = f2
        elif not f2:
            common = f1
        else:
            common = unipoly.gcd(field, f1, f2)
        if unipoly.degree(common) == 0:
            continue
        for b0 in unipoly.rational_roots(field, common):
            pt = (a0, b0, field.one)
            out.append((pt, _net_rank_at(field, qs, pt)))
    # The chart above misses the line z = 0; the restrictions of both
    # partials are binary forms whose common projective roots finish the
    # sweep.
    r1 = d1.restrict_z0()
    r2 = d2.restrict_z0()
    if r1.is_zero() and r2.is_zero():
        return None
    if r1.is_zero():
        gform = r2
    elif r2.is_zero():
        gform = r1
    else:
        gform = binary_gcd(r1, r2)
    if gform.degree > 0:
        aff = unipoly.normalize(field, gform.dehomogenize())
        if unipoly.degree(aff) > 0:
            for t0 in unipoly.rational_roots(field, aff):
                pt = (field.one, field.coerce(t0), field.zero)
                out.append((pt, _net_rank_at(field, qs, pt)))
        if gform.infinity_multiplicity() > 0:
            pt = (field.zero, field.one, field.zero)
            out.append((pt, _net_rank_at(field, qs, pt)))
    return out


def _net_rank_at(field, qs, pt) -> int:
    return linear_combination(field, list(qs), list(pt)).rank()


def genus5_net_check(seed: int, field=None) -> Genus5Report:
    """Smoothness evidence for a random net of quadrics in P^4.

    Checks that the discriminant quintic is nonzero, squarefree on a
    random line, and free of rational rank-3-or-less points among the
    singular candidates.  A degenerate or failed attempt re-runs with a
    fresh derived stream up to five times; the last report is returned
    either way, so failure carries the attempt count with it.
    """
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    if not isinstance(field, PrimeField):
        raise ConfigurationError("root extraction needs a prime field")
    require_sampling_prime(field)
    fmt = field.format
    last = None
    for attempt in range(5):
        rng = derived_rng(seed, "genus5-net", attempt)
        qs = [_random_sym_quadric(field, 5, rng) for _ in range(3)]
        disc = net_discriminant(*qs)
        if disc.is_zero():
            last = Genus5Report(seed, field.p, attempt + 1, attempt,
                                False, False, (), 0, False)
            continue
        line_sf = _random_line_squarefree(field, disc, rng)
        cands = _singular_candidates(field, disc, qs)
        if line_sf is None or cands is None:
            last = Genus5Report(seed, field.p, attempt + 1, attempt,
                                True, bool(line_sf), (), 0, False)
            continue
        serialized = tuple(((fmt(pt[0]), fmt(pt[1]), fmt(pt[2])), rk)
                           for (pt, rk) in cands)
        low = sum(1 for (_, rk) in cands if rk <= 3)
        passed = line_sf and low == 0
        report = Genus5Report(seed, field.p, attempt + 1, attempt,
                              True, line_sf, serialized, low, passed)
        if passed:
            return report
        last = report
    return last
