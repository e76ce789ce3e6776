from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmod.errors import DomainError, InternalCheckError
from qmod.invariants import binom, harris_tu_degree
from qmod.picard import (
    AT_LEAST,
    EXACT,
    Coefficient,
    DivisorClass,
    ExpandedClass,
    bn_class_15,
    boundary_indices,
    canonical_class,
    chern_pair,
    dp_tilde_b,
    fr_dp_class,
    fr_sigma_class,
    general_type_certificate,
    quad_class,
    quad_class_unscaled,
    solve_certificate_multipliers,
    symmetrized_pullback_sum,
    tilde_b,
    z_class_15_9,
)


def test_coefficient_kind_mixing():
    e = Coefficient.exact(3)
    lo = Coefficient.at_least(2)
    assert (e + e).kind == EXACT
    assert (e + lo).kind == AT_LEAST
    assert (e + lo).value == 5
    assert lo.scale(0) == Coefficient.exact(0)
    assert e.scale(-2) == Coefficient.exact(-6)
    with pytest.raises(InternalCheckError):
        lo.scale(-1)
    assert e.as_bound().kind == AT_LEAST


def test_boundary_indices_respect_symmetry():
    idx = boundary_indices(15, 9)
    assert len(idx) == 8 + 7 * 10
    assert (0, 2) in idx and (0, 1) not in idx and (0, 0) not in idx
    for i, s in idx:
        assert 2 * i <= 15


def test_divisor_class_build_and_algebra():
    d = DivisorClass.build(15, 2, lam=1, psi=2, b_irr=3, b={(0, 2): 4})
    assert d.psi == (Coefficient.exact(2),) * 2
    assert d.b[(0, 2)] == Coefficient.exact(4)
    assert d.b[(1, 0)] == Coefficient.exact(0)
    doubled = 2 * d
    assert doubled.lam.value == 2
    total = d.add(doubled)
    assert total.b[(0, 2)].value == 12


def test_divisor_class_rejects_bad_slots():
    with pytest.raises(DomainError):
        DivisorClass.build(15, 2, lam=0, psi=0, b_irr=0, b={(0, 1): 1})
    with pytest.raises(DomainError):
        DivisorClass.build(15, 2, lam=0, psi=[1, 2, 3], b_irr=0, b={})


def test_chern_pair_shapes():
    cp = chern_pair(15, 8)
    assert (cp.e, cp.f) == (7, 26)
    assert cp.c1_e.lam == Coefficient.exact(1)
    assert cp.c1_e.psi[0] == Coefficient.exact(-1)
    assert cp.c1_f.lam == Coefficient.exact(13)
    assert cp.c1_f.b_irr == Coefficient.exact(1)
    with pytest.raises(DomainError):
        chern_pair(8, 8)


def test_quad_class_scaling_example():
    alpha = harris_tu_degree(7, 4)
    assert alpha == 294
    cls = quad_class(11, 4, 4)
    uns = quad_class_unscaled(11, 4, 4)
    assert uns.lam.value == Fraction(47, 7)
    assert cls.lam.value == alpha * Fraction(47, 7)
    assert cls.b_irr == Coefficient.exact(alpha)
    # psi coefficient follows (g+n-6)/(g-n) scaled by alpha.
    assert uns.psi[0].value == Fraction(11 + 4 - 6, 7)


def test_quad_class_slot_kinds():
    cls = quad_class(11, 4, 4)
    for (i, s), c in cls.b.items():
        if i == 0 and s >= 2:
            assert c.kind == EXACT
        elif i < s:
            assert c.kind == AT_LEAST
        else:
            assert c.kind == AT_LEAST
            assert c.value == cls.b_irr.value * 1


def test_quad_class_requires_family_membership():
    with pytest.raises(DomainError):
        quad_class(12, 4, 4)
    with pytest.raises(DomainError):
        quad_class(11, 4, 5)


def test_tilde_b_zero_section_closed_form():
    for g, n in ((11, 4), (15, 6), (16, 9)):
        for s in range(0, 8):
            want = Fraction(s * ((g - 3) * s + n - 3), g - n)
            assert tilde_b(g, n, 0, s) == want


def test_dp_tilde_b_values():
    assert dp_tilde_b(0, 1) == 17
    for s in range(1, 9):
        for i in range(0, s):
            assert dp_tilde_b(i, s) >= 7


def test_dp_class_is_the_advertised_combination():
    cls = fr_dp_class(chern_pair(15, 8))
    # 6 * (39 lambda + 17 sum psi - 7 delta) on all boundary parts.
    want = DivisorClass.build(
        15, 8, lam=6 * 39, psi=6 * 17, b_irr=6 * 7,
        b={key: 6 * 7 for key in boundary_indices(15, 8)})
    assert cls == want
    assert all(c.kind == EXACT for c in cls.b.values())


def test_dp_class_needs_the_right_slice():
    with pytest.raises(DomainError):
        fr_dp_class(chern_pair(15, 6))


def test_sigma_class_calibration():
    cp = chern_pair(15, 6)
    cls = fr_sigma_class(cp, 4)
    alpha = Fraction(harris_tu_degree(9, 4))
    assert cls.lam.value == alpha * Fraction(7 * 15 - 9 * 6 + 6, 9)
    assert cls.psi[0].value == alpha * Fraction(15 + 6 - 6, 9)
    with pytest.raises(DomainError):
        fr_sigma_class(cp, 5)


def test_z_class_values():
    z = z_class_15_9()
    assert z.lam == Coefficient.exact(351)
    assert z.psi == (Coefficient.exact(136),) * 9
    assert z.b_irr == Coefficient.exact(63)
    assert z.b[(0, 2)] == Coefficient.at_least(83)
    assert z.b[(0, 3)] == Coefficient.at_least(63)
    assert z.b[(3, 5)] == Coefficient.at_least(63)


def test_canonical_class_values():
    k = canonical_class(15, 9)
    assert k.lam == Coefficient.exact(13)
    assert k.psi == (Coefficient.exact(1),) * 9
    assert k.b_irr == Coefficient.exact(2)
    assert k.b[(0, 2)] == Coefficient.exact(2)
    assert k.b[(1, 4)] == Coefficient.exact(3)
    assert k.b[(2, 4)] == Coefficient.exact(2)


def test_bn_class_values():
    bn = bn_class_15()
    assert bn.lam == Coefficient.exact(54)
    assert bn.b_irr == Coefficient.exact(8)
    assert all(c == Coefficient.at_least(0) for c in bn.b.values())


small_class = st.builds(
    lambda lam, psi, b_irr, b02: DivisorClass.build(
        7, 2, lam=lam, psi=psi, b_irr=b_irr, b={(0, 2): b02}),
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))


@given(small_class, small_class)
def test_pullback_is_additive(a, b):
    pa = ExpandedClass.from_symmetric(a).pullback_forget_last()
    pb = ExpandedClass.from_symmetric(b).pullback_forget_last()
    pab = ExpandedClass.from_symmetric(a.add(b)).pullback_forget_last()
    assert pab == pa.add(pb)


@given(small_class, st.integers(-5, 5))
def test_pullback_commutes_with_scaling(a, c):
    pa = ExpandedClass.from_symmetric(a).pullback_forget_last()
    assert pa.scale(c) == ExpandedClass.from_symmetric(a.scale(c)).pullback_forget_last()


def test_expanded_round_trip():
    d = DivisorClass.build(9, 3, lam=2, psi=6, b_irr=5, b={(0, 2): 7})
    assert ExpandedClass.from_symmetric(d).to_symmetric() == d
    skew = DivisorClass.build(9, 3, lam=2, psi=[1, 4, 4], b_irr=5, b={(0, 2): 7})
    ex = ExpandedClass.from_symmetric(skew)
    # Marking-dependent psi survives the subset expansion but blocks the
    # symmetric collapse.
    assert ex.psi == (Coefficient.exact(1), Coefficient.exact(4), Coefficient.exact(4))
    with pytest.raises(DomainError):
        ex.to_symmetric()


def test_symmetrized_pullback_sum_stays_symmetric():
    d = DivisorClass.build(7, 2, lam=3, psi=1, b_irr=2, b={(0, 2): 5, (1, 1): 4})
    out = symmetrized_pullback_sum(d)
    assert out.g == 7 and out.n == 3
    assert out.psi[0] == out.psi[1] == out.psi[2]


def test_certificate_holds_at_default_multipliers():
    rep = general_type_certificate(
        Fraction(25, 297), Fraction(2, 297), Fraction(13, 66))
    assert rep.passed
    assert rep.lambda_residual == 0
    assert rep.psi_residual == 0
    assert rep.e_irr == 0
    required = {str(s.required_bound) for s in rep.boundary
                if s.required_bound is not None}
    assert required == {"297", "891/2"}


def test_certificate_solver_recovers_multipliers():
    x, y = solve_certificate_multipliers(Fraction(13, 66))
    assert (x, y) == (Fraction(25, 297), Fraction(2, 297))


def test_certificate_fails_off_the_solution_line():
    rep = general_type_certificate(
        Fraction(25, 297), Fraction(2, 297), Fraction(1, 5))
    assert not rep.passed


def test_certificate_rejects_nonpositive_multipliers():
    with pytest.raises(DomainError):
        general_type_certificate(Fraction(-1), Fraction(2, 297), Fraction(13, 66))
