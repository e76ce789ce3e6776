"""Plane interpolation models of a blown-up surface.

The running example is the plane blown up at 15 general points, with a
degree-13 class embedding it into projective 6-space and a pencil of
quadrics through the image.  Linear systems with assigned base
multiplicities are exact kernels of derivative-evaluation matrices;
everything downstream (quadrics through the image, the discriminant of
their pencil) is exact linear algebra over the same field.  Genericity of
sampled data is the only probabilistic ingredient, handled by seeded
draws with bounded retries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, perm

from . import unipoly
from .binforms import BinaryForm, binary_gcd
from .errors import (ConfigurationError, DomainError, GenericityError,
                     InternalCheckError)
from .fields import DEFAULT_PRIME, PrimeField, derived_rng, require_sampling_prime
from .linalg import Matrix
from .quadlab import QuadricSystem, SymQuadric, form_matrix_det, upper_pairs
from .ternary import TernaryForm, monomial_count, monomials


def _normalize_point(field, p):
    p = [field.coerce(x) for x in p]
    if len(p) != 3:
        raise DomainError("plane points have three coordinates")
    last = None
    for idx in range(2, -1, -1):
        if not field.is_zero(p[idx]):
            last = idx
            break
    if last is None:
        raise DomainError("the zero vector is not a projective point")
    inv = field.inv(p[last])
    return tuple(field.mul(inv, x) for x in p)


class PointConfig:
    """General points of the plane, held as normalized representatives.

    The genericity the interpolation matrices rely on is checked at
    construction time: pairwise distinct, no three collinear.  The
    collinearity check runs over all triples, a stronger condition than
    the multiple-point subsets strictly need.
    """

    __slots__ = ("field", "points", "seed")

    def __init__(self, field, points, *, seed=None):
        pts = [_normalize_point(field, p) for p in points]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] == pts[j]:
                    raise DomainError(f"points {i} and {j} coincide")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                for k in range(j + 1, len(pts)):
                    if field.is_zero(_det3(field, pts[i], pts[j], pts[k])):
                        raise DomainError(f"points {i}, {j}, {k} are collinear")
        self.field = field
        self.points = pts
        self.seed = seed

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def sample(cls, field, n: int, seed: int) -> "PointConfig":
        """Draw n random affine points, retrying degenerate draws.

        Five derived streams are tried before giving up; over a large
        prime field a retry is already a rarity.
        """
        require_sampling_prime(field)
        for attempt in range(5):
            rng = derived_rng(seed, "plane-points", attempt)
            pts = [(field.random_element(rng), field.random_element(rng), field.one)
                   for _ in range(n)]
            try:
                return cls(field, pts, seed=seed)
            except DomainError:
                continue
        raise GenericityError("point configuration kept degenerating",
                              seeds_tried=[seed], data={"attempts": 5})

    def to_json_dict(self) -> dict:
        fmt = self.field.format
        return {"n": self.n,
                "points": [[fmt(x) for x in p] for p in self.points]}


def _det3(field, p, q, r):
    def minor(a, b, c, d):
        return field.sub(field.mul(a, b), field.mul(c, d))

    t0 = field.mul(p[0], minor(q[1], r[2], q[2], r[1]))
    t1 = field.mul(p[1], minor(q[0], r[2], q[2], r[0]))
    t2 = field.mul(p[2], minor(q[0], r[1], q[1], r[0]))
    return field.add(field.sub(t0, t1), t2)


class NSClass:
    """Divisor class on the blown-up plane: a plane degree and assigned
    multiplicities at the blown-up points."""

    __slots__ = ("a", "mults")

    def __init__(self, a: int, mults):
        mults = tuple(mults)
        for v in (a, *mults):
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError("lattice coordinates are integers")
        self.a = a
        self.mults = mults

    def add(self, other: "NSClass") -> "NSClass":
        self._require_same_rank(other)
        return NSClass(self.a + other.a,
                       tuple(x + y for x, y in zip(self.mults, other.mults)))

    def sub(self, other: "NSClass") -> "NSClass":
        self._require_same_rank(other)
        return NSClass(self.a - other.a,
                       tuple(x - y for x, y in zip(self.mults, other.mults)))

    def scale(self, c: int) -> "NSClass":
        if not isinstance(c, int) or isinstance(c, bool):
            raise DomainError("lattice scaling is by integers")
        return NSClass(c * self.a, tuple(c * m for m in self.mults))

    def _require_same_rank(self, other: "NSClass"):
        if len(self.mults) != len(other.mults):
            raise DomainError("classes live on different blow-ups")

    def __eq__(self, other):
        if not isinstance(other, NSClass):
            return NotImplemented
        return self.a == other.a and self.mults == other.mults

    def __repr__(self):
        return f"NSClass({self.a}; {list(self.mults)})"

    def to_json_dict(self) -> dict:
        return {"a": self.a, "mults": list(self.mults)}


def ns_intersect(d1: NSClass, d2: NSClass) -> int:
    """Intersection number a1 a2 - sum(m_i m'_i)."""
    d1._require_same_rank(d2)
    return d1.a * d2.a - sum(x * y for x, y in zip(d1.mults, d2.mults))


def ns_canonical(n: int) -> NSClass:
    return NSClass(-3, (-1,) * n)


def ns_genus(d: NSClass) -> int:
    """Arithmetic genus by adjunction: (d.d + d.K)/2 + 1."""
    total = ns_intersect(d, d) + ns_intersect(d, ns_canonical(len(d.mults)))
    if total % 2 != 0:
        raise InternalCheckError("adjunction total came out odd")
    return total // 2 + 1


def hyperplane_class() -> NSClass:
    """The degree-13 class embedding the 15-point blow-up in P^6."""
    return NSClass(7, (2,) * 7 + (1,) * 8)


def curve_class() -> NSClass:
    """The genus-15 curve class on the same surface."""
    return NSClass(10, (3, 3, 3) + (2,) * 12)


def residual_class() -> NSClass:
    """Twice the hyperplane class minus the curve class; expected empty."""
    return hyperplane_class().scale(2).sub(curve_class())


def expected_system_dim(cls: NSClass) -> int:
    """Parameter count minus conditions, clamped at zero; the dimension
    general points are expected to realize."""
    raw = comb(cls.a + 2, 2) - sum(comb(m + 1, 2) for m in cls.mults)
    return max(0, raw)


class PlaneSystem:
    """Basis of plane forms with assigned point multiplicities.

    The basis is stored as graded-lex coefficient vectors; construction
    re-verifies every multiplicity condition through iterated partial
    derivatives, a deliberately separate code path from the interpolation
    matrix that produced the kernel.
    """

    __slots__ = ("field", "cls", "basis", "config")

    def __init__(self, field, cls: NSClass, basis, config: PointConfig):
        basis = [list(v) for v in basis]
        width = monomial_count(cls.a)
        for v in basis:
            if len(v) != width:
                raise DomainError(f"coefficient vectors must have length {width}")
        self.field = field
        self.cls = cls
        self.basis = basis
        self.config = config
        self._verify_multiplicities()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def forms(self) -> list[TernaryForm]:
        return [TernaryForm(self.field, self.cls.a, v) for v in self.basis]

    def _verify_multiplicities(self):
        field = self.field
        for f in self.forms():
            partials = {(0, 0): f}
            top = min(max(self.cls.mults, default=0), self.cls.a + 1)
            for order in range(1, top):
                for dx in range(order + 1):
                    dy = order - dx
                    if dx > 0:
                        partials[(dx, dy)] = partials[(dx - 1, dy)].partial(0)
                    else:
                        partials[(dx, dy)] = partials[(dx, dy - 1)].partial(1)
            for pt, m in zip(self.config.points, self.cls.mults):
                for dx in range(min(m, self.cls.a + 1)):
                    for dy in range(min(m, self.cls.a + 1) - dx):
                        val = partials[(dx, dy)].evaluate(*pt)
                        if not field.is_zero(val):
                            raise InternalCheckError(
                                "system member misses an assigned multiplicity")

    def impose_point(self, q) -> int:
        """Dimension of the subsystem vanishing at one more point."""
        vals = [f.evaluate(*q) for f in self.forms()]
        drop = 0 if all(self.field.is_zero(v) for v in vals) else 1
        return self.dim - drop

    def random_member(self, rng) -> TernaryForm:
        if self.dim == 0:
            raise DomainError("empty system has no members")
        field = self.field
        for _ in range(5):
            coeffs = [field.random_element(rng) for _ in range(self.dim)]
            acc = TernaryForm.zero(field, self.cls.a)
            for c, f in zip(coeffs, self.forms()):
                acc = acc.add(f.scale(c))
            if not acc.is_zero():
                return acc
        raise GenericityError("random draws kept hitting the zero member",
                              data={"dim": self.dim})

    def to_json_dict(self) -> dict:
        fmt = self.field.format
        return {"class": self.cls.to_json_dict(), "dim": self.dim,
                "basis": [[fmt(c) for c in v] for v in self.basis]}


def _interpolation_kernel(cfg: PointConfig, cls: NSClass) -> PlaneSystem:
    field = cfg.field
    a = cls.a
    if a < 0:
        raise DomainError("negative degree carries no forms")
    if len(cls.mults) != cfg.n:
        raise DomainError("one multiplicity per configured point required")
    if any(m < 0 for m in cls.mults):
        raise DomainError("assigned multiplicities must be nonnegative")
    if isinstance(field, PrimeField) and field.p <= a:
        raise ConfigurationError(
            f"derivative conditions need p > {a}, prime {field.p} is too small")
    mons = monomials(a)
    zero = field.zero
    rows = []
    for pt, m in zip(cfg.points, cls.mults):
        if m == 0:
            continue
        if pt[2] != field.one:
            raise DomainError("interpolation works in the affine chart z = 1")
        xp = _powers(field, pt[0], a)
        yp = _powers(field, pt[1], a)
        for dx in range(m):
            for dy in range(m - dx):
                row = []
                for (al, be, _) in mons:
                    if al < dx or be < dy:
                        row.append(zero)
                        continue
                    ff = field.coerce(perm(al, dx) * perm(be, dy))
                    row.append(field.mul(ff, field.mul(xp[al - dx], yp[be - dy])))
                rows.append(row)
    kern = Matrix(field, len(rows), len(mons), rows, _skip_check=True).kernel_basis()
    return PlaneSystem(field, cls, kern, cfg)


def _powers(field, x, n: int) -> list:
    out = [field.one]
    for _ in range(n):
        out.append(field.mul(out[-1], x))
    return out


def interpolation_basis(cfg: PointConfig, cls: NSClass) -> PlaneSystem:
    """Forms of degree a with the assigned point multiplicities.

    The kernel dimension must match the general-points expectation;
    anything else means the configuration is insufficiently general and
    is reported for resampling rather than silently accepted.
    """
    sys_ = _interpolation_kernel(cfg, cls)
    exp = expected_system_dim(cls)
    if sys_.dim != exp:
        raise GenericityError(
            f"system dimension {sys_.dim}, expected {exp}",
            seeds_tried=None if cfg.seed is None else [cfg.seed],
            data={"class": cls.to_json_dict()})
    return sys_


def _i2_from_plane_system(sys_: PlaneSystem) -> QuadricSystem:
    field = sys_.field
    forms = sys_.forms()
    deg = 2 * sys_.cls.a
    pairs = upper_pairs(sys_.dim)
    prods = [forms[i].mul(forms[j]).coeffs for (i, j) in pairs]
    # Coefficient vectors annihilating the products: kernel with the
    # products as columns, one row per degree-2a monomial.
    rows = [[prod[t] for prod in prods] for t in range(monomial_count(deg))]
    kern = Matrix(field, monomial_count(deg), len(prods), rows,
                  _skip_check=True).kernel_basis()
    quads = [SymQuadric.from_upper_coeffs(field, sys_.dim, v) for v in kern]
    return QuadricSystem(field, sys_.dim - 1, quads)


def surface_i2(cfg: PointConfig) -> QuadricSystem:
    """Quadrics through the image of the embedding system.

    The kernel is computed on full degree-14 coefficient vectors, so
    membership is exact; the expected dimension for general points is 2.
    """
    if cfg.n != 15:
        raise DomainError("the embedding construction uses 15 points")
    hs = interpolation_basis(cfg, hyperplane_class())
    qs = _i2_from_plane_system(hs)
    if qs.dim != 2:
        raise GenericityError(
            f"quadric system dimension {qs.dim}, expected 2",
            seeds_tried=None if cfg.seed is None else [cfg.seed])
    return qs


def pencil_discriminant(q1: SymQuadric, q2: SymQuadric) -> BinaryForm:
    """det(s Q1 + t Q2) as a binary form of degree = matrix size."""
    if q1.size != q2.size:
        raise DomainError("pencil members must share the ambient space")
    if q1.field != q2.field:
        raise DomainError("pencil members must share the field")
    field = q1.field
    n = q1.size
    lin = [[BinaryForm(field, 1, [q1.entries[i][j], q2.entries[i][j]])
            for j in range(n)] for i in range(n)]
    return form_matrix_det(lin, BinaryForm(field, 0, [field.one]))


@dataclass(frozen=True)
class PencilReport:
    """Discriminant data for a pencil of quadrics."""

    degree: int
    nonzero: bool
    squarefree: bool
    nondegenerate: bool
    coeffs: tuple

    def to_json_dict(self) -> dict:
        return {"degree": self.degree, "nonzero": self.nonzero,
                "squarefree": self.squarefree,
                "nondegenerate": self.nondegenerate,
                "coeffs": list(self.coeffs)}


def pencil_nondegeneracy(sys: QuadricSystem) -> PencilReport:
    """Discriminant of a two-member system: degree, vanishing flag, and
    squarefreeness; nondegenerate means nonzero and squarefree.

    Squarefreeness is projective, so a vanishing leading coefficient
    (a degenerate member of the pencil at infinity) is still seen.
    """
    if sys.dim != 2:
        raise DomainError("pencil needs exactly two independent quadrics")
    disc = pencil_discriminant(sys.basis[0], sys.basis[1])
    nonzero = not disc.is_zero()
    sf = disc.squarefree() if nonzero else False
    fmt = sys.field.format
    return PencilReport(degree=disc.degree, nonzero=nonzero, squarefree=sf,
                        nondegenerate=nonzero and sf,
                        coeffs=tuple(fmt(c) for c in disc.coeffs))


@dataclass(frozen=True)
class BaseLocusItem:
    name: str
    passed: bool
    data: dict

    def to_json_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "data": self.data}


@dataclass(frozen=True)
class BaseLocusReport:
    items: tuple
    passed: bool

    def to_json_dict(self) -> dict:
        return {"items": [it.to_json_dict() for it in self.items],
                "pass": self.passed}


def base_locus_evidence(cfg: PointConfig, cls: NSClass, trials: int, *,
                        seed: int = 0) -> BaseLocusReport:
    """Probabilistic evidence that a system is base point free off its
    assigned multiplicities.  Report-only; nothing raises on failure.

    Item extra-points: each of `trials` random extra points cuts the
    dimension by exactly 1.  Item common-factor: two random members have
    constant gcd, probed through a random line restriction.  Item
    resultants: eliminating either variable from two random members
    leaves roots at the assigned coordinates with exactly the
    multiplicity the assigned base points account for, and the leftover
    factor is squarefree; its rational roots are moving intersections and
    are reported as data, not failures.
    """
    if trials < 0:
        raise DomainError("trial count must be nonnegative")
    field = cfg.field
    sys_ = _interpolation_kernel(cfg, cls)
    rng = derived_rng(seed, "base-locus", cls.a)
    items = (_extra_point_item(field, sys_, trials, rng),
             _common_factor_item(field, sys_, rng),
             _resultant_item(field, sys_, rng))
    return BaseLocusReport(items=items, passed=all(it.passed for it in items))


def _extra_point_item(field, sys_: PlaneSystem, trials: int, rng) -> BaseLocusItem:
    drops = []
    for _ in range(trials):
        q = (field.random_element(rng), field.random_element(rng), field.one)
        drops.append(sys_.dim - sys_.impose_point(q))
    passed = sys_.dim > 0 and all(d == 1 for d in drops)
    return BaseLocusItem("extra-points", passed,
                         {"dim": sys_.dim, "drops": drops})


def _common_factor_item(field, sys_: PlaneSystem, rng) -> BaseLocusItem:
    if sys_.dim == 0:
        return BaseLocusItem("common-factor", False, {"dim": 0})
    f1 = sys_.random_member(rng)
    f2 = sys_.random_member(rng)
    for _ in range(3):
        p0 = [field.random_element(rng) for _ in range(3)]
        p1 = [field.random_element(rng) for _ in range(3)]
        try:
            r1 = f1.restrict_to_line(p0, p1)
            r2 = f2.restrict_to_line(p0, p1)
        except DomainError:
            continue
        if r1.is_zero() or r2.is_zero():
            continue
        gdeg = binary_gcd(r1, r2).degree
        return BaseLocusItem("common-factor", gdeg == 0, {"gcd_degree": gdeg})
    return BaseLocusItem("common-factor", False, {"error": "no usable line"})


def _resultant_item(field, sys_: PlaneSystem, rng) -> BaseLocusItem:
    if sys_.dim == 0:
        return BaseLocusItem("resultants", False, {"dim": 0})
    if not isinstance(field, PrimeField):
        raise ConfigurationError("resultant evidence extracts roots over a prime field")
    data: dict = {}
    passed = True
    for var in ("x", "y"):
        outcome = _one_resultant(field, sys_, var, rng)
        data[var] = outcome
        passed = passed and outcome.get("pass", False)
    return BaseLocusItem("resultants", passed, data)


def _one_resultant(field, sys_: PlaneSystem, var: str, rng) -> dict:
    a = sys_.cls.a
    # index of the leading coefficient of the eliminated variable, and
    # which coordinate of each point survives the elimination
    lead = monomials(a).index((a, 0, 0) if var == "x" else (0, a, 0))
    kept = 1 if var == "x" else 0
    members = None
    for _ in range(5):
        f1 = sys_.random_member(rng)
        f2 = sys_.random_member(rng)
        if not field.is_zero(f1.coeffs[lead]) and not field.is_zero(f2.coeffs[lead]):
            members = (f1, f2)
            break
    if members is None:
        return {"pass": False, "error": "members kept losing the leading term"}
    f1, f2 = members
    bound = a * a
    if field.p <= bound:
        raise ConfigurationError(
            f"resultant interpolation needs p > {bound}, prime {field.p} is too small")
    nodes = [field.coerce(t) for t in range(bound + 1)]
    vals = []
    for t in nodes:
        if var == "x":
            u1, u2 = f1.eval_fix_yz(t, field.one), f2.eval_fix_yz(t, field.one)
        else:
            u1, u2 = f1.eval_fix_xz(t, field.one), f2.eval_fix_xz(t, field.one)
        vals.append(unipoly.resultant_prs(
            field, unipoly.normalize(field, u1), unipoly.normalize(field, u2)))
    res = unipoly.interpolate(field, nodes, vals)
    if unipoly.is_zero(res):
        return {"pass": False, "error": "resultant vanished identically"}
    expected: dict = {}
    for pt, m in zip(sys_.config.points, sys_.cls.mults):
        if m > 0:
            coord = pt[kept]
            expected[coord] = expected.get(coord, 0) + m * m
    matched = True
    leftover = res
    for coord, mult in sorted(expected.items()):
        have = unipoly.root_multiplicity(field, res, coord)
        if have != mult:
            matched = False
            continue
        lin = [field.neg(coord), field.one]
        for _ in range(mult):
            leftover = unipoly.divmod_poly(field, leftover, lin)[0]
    leftover_sf = (unipoly.degree(leftover) < 1
                   or unipoly.squarefree_test(field, leftover))
    moving = (unipoly.rational_roots(field, leftover)
              if unipoly.degree(leftover) >= 1 else [])
    return {"pass": matched and leftover_sf,
            "degree": unipoly.degree(res),
            "assigned_mults_matched": matched,
            "leftover_squarefree": leftover_sf,
            "moving_rational_roots": len(moving)}


@dataclass(frozen=True)
class SeparationReport:
    trials: int
    failures: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {"trials": self.trials, "failures": self.failures,
                "pass": self.passed}


def separation_evidence(sys_: PlaneSystem, trials: int, seed: int = 0) -> SeparationReport:
    """Evidence that the system separates points: at random plane point
    pairs, the evaluation vectors are projectively independent."""
    if sys_.dim < 2:
        raise DomainError("separation needs a system of dimension at least 2")
    field = sys_.field
    rng = derived_rng(seed, "separation", sys_.cls.a)
    forms = sys_.forms()
    failures = 0
    for _ in range(trials):
        q1 = (field.random_element(rng), field.random_element(rng), field.one)
        q2 = (field.random_element(rng), field.random_element(rng), field.one)
        if q1 == q2:
            continue
        v1 = [f.evaluate(*q1) for f in forms]
        v2 = [f.evaluate(*q2) for f in forms]
        if Matrix.from_rows(field, [v1, v2]).rank() != 2:
            failures += 1
    return SeparationReport(trials=trials, failures=failures, passed=failures == 0)


@dataclass(frozen=True)
class SurfaceReport:
    """Outcome of the full blow-up verification chain for one seed."""

    seed: int
    prime: int
    stage: str
    h_dim: int | None
    curve_dim: int | None
    residual_dim: int | None
    i2_dim: int | None
    pencil: PencilReport | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "prime": self.prime,
            "stage": self.stage,
            "h_dim": self.h_dim,
            "curve_dim": self.curve_dim,
            "residual_dim": self.residual_dim,
            "i2_dim": self.i2_dim,
            "pencil": None if self.pencil is None else self.pencil.to_json_dict(),
            "lattice": lattice_checks(),
            "passed": self.passed,
        }


def lattice_checks() -> dict:
    """Seed-independent intersection numbers of the example classes."""
    h = hyperplane_class()
    c = curve_class()
    return {"c_dot_h": ns_intersect(c, h), "h_self": ns_intersect(h, h),
            "genus_c": ns_genus(c), "genus_line": ns_genus(NSClass(1, (0,) * 15)),
            "genus_conic": ns_genus(NSClass(2, (0,) * 15))}


def blowup_report(seed: int, field=None) -> SurfaceReport:
    """One full pass of the construction for one point configuration.

    No internal reseeding: the seed decides the configuration and the
    report tells the truth about it, so failure rates across seeds stay
    measurable.  Stages fail in order; a report carries the dimensions
    reached before the failing stage.
    """
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    require_sampling_prime(field)
    prime = field.p if isinstance(field, PrimeField) else 0
    h_dim = curve_dim = residual_dim = i2_dim = None
    pencil = None
    try:
        cfg = PointConfig.sample(field, 15, seed)
    except GenericityError:
        return SurfaceReport(seed, prime, "points", None, None, None, None, None, False)
    try:
        hs = interpolation_basis(cfg, hyperplane_class())
        h_dim = hs.dim
        curve_dim = interpolation_basis(cfg, curve_class()).dim
        residual_dim = interpolation_basis(cfg, residual_class()).dim
    except GenericityError:
        return SurfaceReport(seed, prime, "linear-systems", h_dim, curve_dim,
                             residual_dim, None, None, False)
    qs = _i2_from_plane_system(hs)
    i2_dim = qs.dim
    if i2_dim != 2:
        return SurfaceReport(seed, prime, "quadrics", h_dim, curve_dim,
                             residual_dim, i2_dim, None, False)
    pencil = pencil_nondegeneracy(qs)
    passed = (h_dim == 7 and curve_dim == 12 and residual_dim == 0
              and i2_dim == 2 and pencil.nondegenerate and pencil.degree == 7)
    return SurfaceReport(seed, prime, "complete", h_dim, curve_dim,
                         residual_dim, i2_dim, pencil, passed)


def blowup_verify(seed: int, field=None) -> SurfaceReport:
    """Resample-and-report wrapper: up to five derived configurations,
    first passing report wins, otherwise the last failure is returned."""
    last = None
    for attempt in range(5):
        use = seed if attempt == 0 else derived_rng(
            seed, "blowup-retry", attempt).randrange(2 ** 32)
        report = blowup_report(use, field)
        if report.passed:
            return report
        last = report
    return last
