"""Divisor-class bookkeeping on moduli of stable n-pointed genus-g curves.

Classes are stored against the standard generators: lambda, the n point
classes psi_j, and the boundary divisors.  Boundary coefficients are kept
NEGATED (a class is lambda-part + psi-part - b_irr*delta_irr - sum of
b_{i:s}*delta_{i:S}), matching how the results of interest are displayed.

Coefficients carry a kind: Exact, or AtLeast for slots where only a lower
bound is proved.  Bound arithmetic is deliberately strict - anything
touching an AtLeast becomes AtLeast, and scaling an AtLeast by a negative
rational is a fatal internal error, never a silent sign flip.

Symmetric classes index boundary slots by (i, s) = (component genus,
number of marked points on it) with the representative i <= g-i (ties by
smaller s).  A single pullback along a forgetful map is NOT symmetric -
the new point is special - so pullbacks live in an expanded per-subset
representation and only symmetrized sums collapse back to (i, s) storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, InternalCheckError
from .invariants import _q_formula, binom, harris_tu_degree

EXACT = "exact"
AT_LEAST = "at_least"


@dataclass(frozen=True)
class Coefficient:
    """An exact rational value, or a rational lower bound."""

    kind: str
    value: Fraction

    @classmethod
    def exact(cls, v) -> "Coefficient":
        return cls(EXACT, Fraction(v))

    @classmethod
    def at_least(cls, v) -> "Coefficient":
        return cls(AT_LEAST, Fraction(v))

    def __post_init__(self):
        if self.kind not in (EXACT, AT_LEAST):
            raise DomainError(f"unknown coefficient kind {self.kind!r}")
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def add(self, other: "Coefficient") -> "Coefficient":
        kind = EXACT if self.kind == other.kind == EXACT else AT_LEAST
        return Coefficient(kind, self.value + other.value)

    def __add__(self, other):
        return self.add(other)

    def scale(self, a) -> "Coefficient":
        a = Fraction(a)
        if a == 0:
            return Coefficient.exact(0)
        if a < 0 and self.kind == AT_LEAST:
            raise InternalCheckError(
                "negative scaling of a lower-bound coefficient loses the bound"
            )
        return Coefficient(self.kind, a * self.value)

    def as_bound(self) -> "Coefficient":
        """Forget exactness, keep the value as a lower bound."""
        return Coefficient(AT_LEAST, self.value)

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "value": _fmt(self.value)}


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


ZERO = Coefficient.exact(0)


def boundary_indices(g: int, n: int) -> list[tuple[int, int]]:
    """Canonical (i, s) slots for the boundary divisors of (g, n).

    i = 0 needs s >= 2 (a genus-0 limb needs three special points); the
    mirror constraint for i = g is absorbed by the representative choice
    i <= g - i.  For even g the middle slots keep s <= n - s.
    """
    if g < 2 or n < 0:
        raise DomainError("boundary bookkeeping needs g >= 2, n >= 0")
    out = []
    for s in range(2, n + 1):
        out.append((0, s))
    for i in range(1, g // 2 + 1):
        smax = n if 2 * i < g else n // 2
        for s in range(0, smax + 1):
            out.append((i, s))
    return out


def canonical_pair(g: int, n: int, i: int, s: int) -> tuple[int, int]:
    """Representative of the divisor (i, S with |S|=s) under (i,S) ~ (g-i, S^c)."""
    if not (0 <= i <= g and 0 <= s <= n):
        raise DomainError(f"slot ({i}, {s}) out of range for (g, n)=({g}, {n})")
    if i == 0 and s < 2:
        raise DomainError(f"slot (0, {s}) does not index a boundary divisor")
    if i == g and n - s < 2:
        raise DomainError(f"slot ({i}, {s}) does not index a boundary divisor")
    if 2 * i > g or (2 * i == g and 2 * s > n):
        i, s = g - i, n - s
    return i, s


class DivisorClass:
    """A symmetric-boundary divisor class on (g, n)."""

    __slots__ = ("g", "n", "lam", "psi", "b_irr", "b")

    def __init__(self, g: int, n: int, lam: Coefficient, psi, b_irr: Coefficient, b: dict):
        if g < 2 or n < 0:
            raise DomainError("divisor classes are kept for g >= 2, n >= 0")
        psi = tuple(psi)
        if len(psi) != n:
            raise DomainError(f"need {n} psi coefficients, got {len(psi)}")
        if not lam.is_exact or any(not p.is_exact for p in psi):
            raise DomainError("lower-bound kinds are only legal in boundary slots")
        slots = boundary_indices(g, n)
        bb = {}
        for key in slots:
            bb[key] = b.get(key, ZERO)
        extra = set(b) - set(slots)
        if extra:
            raise DomainError(f"coefficients at non-boundary slots: {sorted(extra)}")
        self.g = g
        self.n = n
        self.lam = lam
        self.psi = psi
        self.b_irr = b_irr
        self.b = bb

    @classmethod
    def build(cls, g: int, n: int, *, lam=0, psi=0, b_irr=ZERO, b=None) -> "DivisorClass":
        """Convenience constructor: rationals become exact coefficients and
        a scalar psi is broadcast to every point."""
        lamc = lam if isinstance(lam, Coefficient) else Coefficient.exact(lam)
        if isinstance(psi, (list, tuple)):
            psic = tuple(p if isinstance(p, Coefficient) else Coefficient.exact(p) for p in psi)
        else:
            p = psi if isinstance(psi, Coefficient) else Coefficient.exact(psi)
            psic = (p,) * n
        birr = b_irr if isinstance(b_irr, Coefficient) else Coefficient.exact(b_irr)
        bb = {}
        for key, v in (b or {}).items():
            bb[key] = v if isinstance(v, Coefficient) else Coefficient.exact(v)
        return cls(g, n, lamc, psic, birr, bb)

    def _require_same_space(self, other: "DivisorClass"):
        if (self.g, self.n) != (other.g, other.n):
            raise DomainError("divisor classes on different (g, n)")

    def add(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_space(other)
        return DivisorClass(
            self.g, self.n,
            self.lam + other.lam,
            tuple(a + b for a, b in zip(self.psi, other.psi)),
            self.b_irr + other.b_irr,
            {k: self.b[k] + other.b[k] for k in self.b},
        )

    def __add__(self, other):
        return self.add(other)

    def scale(self, a) -> "DivisorClass":
        return DivisorClass(
            self.g, self.n,
            self.lam.scale(a),
            tuple(p.scale(a) for p in self.psi),
            self.b_irr.scale(a),
            {k: v.scale(a) for k, v in self.b.items()},
        )

    def __rmul__(self, a):
        return self.scale(a)

    def boundary_as_bounds(self) -> "DivisorClass":
        """Same class with every (i, s) slot downgraded to a lower bound."""
        return DivisorClass(
            self.g, self.n, self.lam, self.psi, self.b_irr,
            {k: v.as_bound() for k, v in self.b.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and (self.g, self.n) == (other.g, other.n)
            and self.lam == other.lam
            and self.psi == other.psi
            and self.b_irr == other.b_irr
            and self.b == other.b
        )

    def __repr__(self):
        return f"DivisorClass(g={self.g}, n={self.n}, lam={self.lam.value})"

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "lambda": _fmt(self.lam.value),
            "psi": [_fmt(p.value) for p in self.psi],
            "b_irr": self.b_irr.to_json_dict(),
            "b": [
                {"i": i, "s": s, **self.b[(i, s)].to_json_dict()}
                for (i, s) in sorted(self.b)
            ],
        }


class ExpandedClass:
    """Per-subset boundary storage for non-symmetric intermediates.

    Keys are (i, frozenset S) with the same (i, S) ~ (g-i, S^c)
    identification as the symmetric storage.  Only pullbacks and their
    sums need this; results are collapsed back with to_symmetric().
    """

    __slots__ = ("g", "n", "lam", "psi", "b_irr", "b")

    def __init__(self, g: int, n: int, lam: Coefficient, psi, b_irr: Coefficient, b: dict):
        self.g = g
        self.n = n
        self.lam = lam
        self.psi = tuple(psi)
        self.b_irr = b_irr
        self.b = dict(b)

    @classmethod
    def from_symmetric(cls, c: DivisorClass) -> "ExpandedClass":
        labels = range(1, c.n + 1)
        b = {}
        for (i, s), coeff in c.b.items():
            for S in combinations(labels, s):
                b[_canon_subset(c.g, c.n, i, frozenset(S))] = coeff
        return cls(c.g, c.n, c.lam, c.psi, c.b_irr, b)

    def coeff(self, i: int, S: frozenset) -> Coefficient:
        return self.b.get(_canon_subset(self.g, self.n, i, S), ZERO)

    def _bump(self, b: dict, i: int, S: frozenset, coeff: Coefficient):
        key = _canon_subset(self.g, self.n + 1, i, S)
        b[key] = b.get(key, ZERO) + coeff

    def pullback_forget_last(self) -> "ExpandedClass":
        """Pullback along the map (g, n+1) -> (g, n) forgetting point n+1.

        lambda and delta_irr are unchanged; psi_i picks up the correction
        -delta_{0:{i, n+1}}; each delta_{i:S} pulls back to the two slots
        with and without the new point.  Lower bounds propagate as lower
        bounds to both slots.
        """
        g, n1 = self.g, self.n + 1
        new = ExpandedClass(g, n1, self.lam, tuple(self.psi) + (ZERO,), self.b_irr, {})
        b: dict = {}
        for idx, p in enumerate(self.psi, start=1):
            if p.value != 0 or not p.is_exact:
                # class has +p psi_idx; pullback adds -p delta_{0:{idx, n+1}}
                # i.e. +p in negated-boundary storage.
                new._bump(b, 0, frozenset({idx, n1}), p)
        for (i, S), coeff in self.b.items():
            new._bump(b, i, S, coeff)
            new._bump(b, i, S | {n1}, coeff)
        new.b = b
        return new

    def relabel(self, perm: dict[int, int]) -> "ExpandedClass":
        """Apply a marked-point relabeling (a bijection on 1..n)."""
        psi = [None] * self.n
        for idx, p in enumerate(self.psi, start=1):
            psi[perm[idx] - 1] = p
        b = {}
        for (i, S), coeff in self.b.items():
            key = _canon_subset(self.g, self.n, i, frozenset(perm[x] for x in S))
            b[key] = b.get(key, ZERO) + coeff
        return ExpandedClass(self.g, self.n, self.lam, tuple(psi), self.b_irr, b)

    def add(self, other: "ExpandedClass") -> "ExpandedClass":
        if (self.g, self.n) != (other.g, other.n):
            raise DomainError("expanded classes on different (g, n)")
        b = dict(self.b)
        for key, coeff in other.b.items():
            b[key] = b.get(key, ZERO) + coeff
        return ExpandedClass(
            self.g, self.n,
            self.lam + other.lam,
            tuple(a + c for a, c in zip(self.psi, other.psi)),
            self.b_irr + other.b_irr,
            b,
        )

    def scale(self, a) -> "ExpandedClass":
        return ExpandedClass(
            self.g, self.n,
            self.lam.scale(a),
            tuple(p.scale(a) for p in self.psi),
            self.b_irr.scale(a),
            {k: v.scale(a) for k, v in self.b.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, ExpandedClass):
            return NotImplemented
        drop = {ZERO}
        mine = {k: v for k, v in self.b.items() if v not in drop}
        theirs = {k: v for k, v in other.b.items() if v not in drop}
        return ((self.g, self.n, self.lam, self.psi, self.b_irr, mine)
                == (other.g, other.n, other.lam, other.psi, other.b_irr, theirs))

    def to_symmetric(self) -> DivisorClass:
        """Collapse to (i, s) storage; fails if any orbit is not constant."""
        psi0 = self.psi[0] if self.psi else None
        if any(p != psi0 for p in self.psi):
            raise DomainError("psi coefficients are not symmetric")
        by_slot: dict[tuple[int, int], Coefficient] = {}
        for (i, S), coeff in self.b.items():
            slot = canonical_pair(self.g, self.n, i, len(S))
            prev = by_slot.get(slot)
            if prev is None:
                by_slot[slot] = coeff
            elif prev != coeff:
                raise DomainError(f"boundary coefficients not symmetric at {slot}")
        for slot in boundary_indices(self.g, self.n):
            i, s = slot
            count = _orbit_size(self.g, self.n, i, s)
            present = sum(
                1 for (j, S) in self.b if canonical_pair(self.g, self.n, j, len(S)) == slot
            )
            if present not in (0, count):
                raise DomainError(f"boundary orbit at {slot} only partially filled")
        return DivisorClass(self.g, self.n, self.lam, self.psi, self.b_irr, by_slot)


def _canon_subset(g: int, n: int, i: int, S: frozenset) -> tuple[int, frozenset]:
    s = len(S)
    if not (0 <= i <= g and S <= set(range(1, n + 1))):
        raise DomainError(f"bad boundary key ({i}, {sorted(S)})")
    if i == 0 and s < 2:
        raise DomainError(f"slot (0, {sorted(S)}) does not index a boundary divisor")
    if i == g and n - s < 2:
        raise DomainError(f"slot ({i}, {sorted(S)}) does not index a boundary divisor")
    comp = frozenset(range(1, n + 1)) - S
    if 2 * i > g:
        return g - i, comp
    if 2 * i == g:
        if len(comp) < s or (len(comp) == s and tuple(sorted(comp)) < tuple(sorted(S))):
            return i, comp
    return i, S


def _orbit_size(g: int, n: int, i: int, s: int) -> int:
    if 2 * i == g and 2 * s == n:
        # self-conjugate middle slots pair up subsets with their complements
        return binom(n, s) // 2 if n else 1
    return binom(n, s)


@dataclass(frozen=True)
class ChernPair:
    """First Chern data of the two tautological bundles on (g, n):
    c1(E) = lambda - sum psi_j and c1(F) = 13 lambda - 5 sum psi_j - delta,
    together with their ranks e = g - n and f = 3g - 3 - 2n.
    """

    g: int
    n: int
    c1_e: DivisorClass
    c1_f: DivisorClass
    e: int
    f: int


def chern_pair(g: int, n: int) -> ChernPair:
    if n < 1:
        raise DomainError("need at least one marked point")
    if g <= n:
        raise DomainError(f"need g > n for positive bundle rank, got g={g}, n={n}")
    c1_e = DivisorClass.build(g, n, lam=1, psi=-1)
    ones = {key: 1 for key in boundary_indices(g, n)}
    c1_f = DivisorClass.build(g, n, lam=13, psi=-5, b_irr=1, b=ones)
    return ChernPair(g, n, c1_e, c1_f, g - n, 3 * g - 3 - 2 * n)


def fr_sigma_class(cp: ChernPair, k: int) -> DivisorClass:
    """Virtual class of the rank-<=k locus as a combination of the Chern
    data, scaled by the rank-locus degree:

        A^k_e * (c1(F) - (2f/e) c1(E)).

    Requires the codimension-one calibration f = binom(e+1,2) - binom(e-k+1,2).
    """
    e, f = cp.e, cp.f
    if not 3 <= k <= e:
        raise DomainError(f"need 3 <= k <= e, got k={k}, e={e}")
    expected_f = binom(e + 1, 2) - binom(e - k + 1, 2)
    if f != expected_f:
        raise DomainError(
            f"calibration failed: f={f} but the rank-{k} locus needs {expected_f}"
        )
    alpha = harris_tu_degree(e, k)
    t = Fraction(2 * f, e)
    combo = cp.c1_f.add(cp.c1_e.scale(-t))
    return combo.scale(alpha)


def fr_dp_class(cp: ChernPair) -> DivisorClass:
    """Virtual class of the degenerate-pencil locus:

        (e - 1) * (e c1(F) - (e^2 + e - 4) c1(E)),

    under the pencil calibration f = binom(e+1,2) - 2.
    """
    e, f = cp.e, cp.f
    if e < 2:
        raise DomainError(f"need bundle rank e >= 2, got {e}")
    if f != binom(e + 1, 2) - 2:
        raise DomainError(
            f"calibration failed: f={f} but the pencil locus needs {binom(e + 1, 2) - 2}"
        )
    combo = cp.c1_f.scale(e).add(cp.c1_e.scale(-(e * e + e - 4)))
    return combo.scale(e - 1)


def tilde_b(g: int, n: int, i: int, s: int) -> Fraction:
    """Boundary lower-bound polynomial for slots with i < s, normalized by
    the bundle rank g - n (the unscaled-by-alpha convention)."""
    if g <= n:
        raise DomainError("need g > n")
    num = (
        -(i * i) * (g - 2 * n + 3)
        + i * (2 * g - 2 * s * n + 6 * s - 3 * n + 3)
        + s * ((g - 3) * s + n - 3)
    )
    return Fraction(num, g - n)


def dp_tilde_b(i: int, s: int) -> int:
    """The (g, n) = (15, 8) specialization used by the pencil-locus class:
    -2 i^2 + i (9 - 10 s) + s (12 s + 5)."""
    return -2 * i * i + i * (9 - 10 * s) + s * (12 * s + 5)


def quad_class(g: int, n: int, k: int) -> DivisorClass:
    """The rank-locus divisor class with its refined boundary knowledge,
    scaled by alpha = A^k_e.

    Boundary slots: b_irr is exactly alpha; for k = 4 the (0, s) slots are
    exact; other slots with i < s carry the exact tilde-b value as a lower
    bound; the remaining slots carry the generic lower bound alpha * 1.
    """
    _require_family_member(g, n, k)
    cp = chern_pair(g, n)
    base = fr_sigma_class(cp, k)
    alpha = Fraction(harris_tu_degree(g - n, k))
    b = {}
    for (i, s) in boundary_indices(g, n):
        if i < s:
            v = alpha * tilde_b(g, n, i, s)
            if k == 4 and i == 0:
                b[(i, s)] = Coefficient.exact(v)
            else:
                b[(i, s)] = Coefficient.at_least(v)
        else:
            b[(i, s)] = Coefficient.at_least(alpha)
    return DivisorClass(g, n, base.lam, base.psi, Coefficient.exact(alpha), b)


def quad_class_unscaled(g: int, n: int, k: int) -> DivisorClass:
    """quad_class divided by alpha; exposes the (a, c) coefficients directly."""
    cls = quad_class(g, n, k)
    alpha = harris_tu_degree(g - n, k)
    return cls.scale(Fraction(1, alpha))


def _require_family_member(g: int, n: int, k: int):
    if n < 1 or not 4 <= k <= g - n:
        raise DomainError(f"(g, n, k)=({g}, {n}, {k}) outside the calibrated family")
    if _q_formula(g, g - n - 1, 2 * g - 2 - n, k) != -1:
        raise DomainError(
            f"(g, n, k)=({g}, {n}, {k}) fails the expected-dimension -1 condition"
        )


def pullback_forgetful(c: DivisorClass | ExpandedClass) -> ExpandedClass:
    """Pullback along the forgetful map dropping the last marked point.

    The result is genuinely non-symmetric (the new point is special), so
    it is returned in expanded per-subset storage; symmetrized sums
    collapse back via symmetrized_pullback_sum.
    """
    if isinstance(c, DivisorClass):
        c = ExpandedClass.from_symmetric(c)
    return c.pullback_forget_last()


def symmetrized_pullback_sum(c: DivisorClass) -> DivisorClass:
    """Sum of the pullbacks of c along all n+1 forgetful maps (g, n+1) -> (g, n)."""
    base = pullback_forgetful(c)
    n1 = c.n + 1
    total = base
    for j in range(1, n1):
        # conjugate the forget-last pullback by the transposition (j, n+1)
        perm = {x: x for x in range(1, n1 + 1)}
        perm[j], perm[n1] = n1, j
        total = total.add(base.relabel(perm))
    return total.to_symmetric()


def z_class_15_9() -> DivisorClass:
    """Average of the nine forgetful pullbacks of the (15, 8) pencil-locus
    class, with that class's boundary slots carried as lower bounds, scaled
    by 1/6.
    """
    dp = fr_dp_class(chern_pair(15, 8))
    z = symmetrized_pullback_sum(dp.boundary_as_bounds())
    return z.scale(Fraction(1, 6))


def canonical_class(g: int, n: int) -> DivisorClass:
    """Canonical class: 13 lambda + sum psi - 2 delta_irr - 2 delta_{0:S}
    - 3 delta_{1:S} - 2 delta_{i:S} for i >= 2 (negated storage)."""
    b = {}
    for (i, s) in boundary_indices(g, n):
        b[(i, s)] = Coefficient.exact(3 if min(i, g - i) == 1 else 2)
    return DivisorClass.build(g, n, lam=13, psi=1, b_irr=2, b=b)


def bn_class_15() -> DivisorClass:
    """Pullback to (15, 9) of the genus-15 rank-locus divisor on the
    unpointed moduli: 54 lambda - 8 delta_irr, with every other boundary
    coefficient carried as the trivial lower bound 0."""
    b = {key: Coefficient.at_least(0) for key in boundary_indices(15, 9)}
    return DivisorClass.build(15, 9, lam=54, psi=0, b_irr=8, b=b)


@dataclass(frozen=True)
class BoundarySlotReport:
    i: int
    s: int
    status: str  # "nonnegative" | "requires_bound"
    slack_kind: str
    slack_value: Fraction
    required_bound: Fraction | None

    def to_json_dict(self) -> dict:
        out = {
            "i": self.i,
            "s": self.s,
            "status": self.status,
            "slack": {"kind": self.slack_kind, "value": _fmt(self.slack_value)},
        }
        out["required_bound"] = None if self.required_bound is None else _fmt(self.required_bound)
        return out


@dataclass(frozen=True)
class CertificateReport:
    x: Fraction
    y: Fraction
    z: Fraction
    lambda_residual: Fraction
    psi_residual: Fraction
    e_irr: Fraction
    boundary: tuple[BoundarySlotReport, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "multipliers": {"x": _fmt(self.x), "y": _fmt(self.y), "z": _fmt(self.z)},
            "lambda_residual": _fmt(self.lambda_residual),
            "psi_residual": _fmt(self.psi_residual),
            "e_irr": _fmt(self.e_irr),
            "boundary": [slot.to_json_dict() for slot in self.boundary],
            "passed": self.passed,
        }


def general_type_certificate(x, y, z) -> CertificateReport:
    """Check the decomposition K = x sum(psi) + y Z + z BN + E on (15, 9).

    Reports the exact lambda and psi residuals, the delta_irr slack of E,
    and per boundary slot either a verified nonnegative slack or the
    minimal lower bound on the Z slot that would produce one.  The
    certificate passes iff both residuals vanish and the delta_irr slack
    is nonnegative; boundary slots are informational.
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if x < 0 or y < 0 or z < 0:
        raise DomainError("certificate multipliers must be nonnegative")
    K = canonical_class(15, 9)
    Z = z_class_15_9()
    BN = bn_class_15()

    lambda_residual = K.lam.value - (y * Z.lam.value + z * BN.lam.value)
    psi_residuals = {
        K.psi[j].value - (x + y * Z.psi[j].value + z * BN.psi[j].value) for j in range(9)
    }
    if len(psi_residuals) != 1:
        raise InternalCheckError("psi residuals differ across marked points")
    psi_residual = psi_residuals.pop()

    # delta_irr coefficient of E = K - x sum(psi) - y Z - z BN, with the
    # stored b values being the negated boundary coefficients.
    e_irr = -K.b_irr.value + y * Z.b_irr.value + z * BN.b_irr.value

    slots = []
    for (i, s) in boundary_indices(15, 9):
        kc, zc, bc = K.b[(i, s)], Z.b[(i, s)], BN.b[(i, s)]
        slack_value = -kc.value + y * zc.value + z * bc.value
        slack_kind = EXACT if (kc.is_exact and zc.is_exact and bc.is_exact) else AT_LEAST
        if slack_value >= 0:
            slots.append(BoundarySlotReport(i, s, "nonnegative", slack_kind, slack_value, None))
        else:
            if y > 0:
                required = (kc.value - z * bc.value) / y
            else:
                required = None
            slots.append(
                BoundarySlotReport(i, s, "requires_bound", slack_kind, slack_value, required)
            )

    passed = lambda_residual == 0 and psi_residual == 0 and e_irr >= 0
    return CertificateReport(
        x, y, z, lambda_residual, psi_residual, e_irr, tuple(slots), passed
    )


def solve_certificate_multipliers(z) -> tuple[Fraction, Fraction]:
    """Given z, solve the two exact coefficient equations
    351 y + 54 z = 13 and x + 136 y = 1 for (x, y)."""
    z = Fraction(z)
    Z = z_class_15_9()
    BN = bn_class_15()
    K = canonical_class(15, 9)
    y = (K.lam.value - z * BN.lam.value) / Z.lam.value
    x = K.psi[0].value - y * Z.psi[0].value - z * BN.psi[0].value
    return x, y
