import random

import pytest

from qmod.errors import ConfigurationError, DomainError
from qmod.fields import QQ, DEFAULT_PRIME, PrimeField, derived_rng
from qmod.linalg import Matrix
from qmod.quadlab import i2_basis, ParamCurve
from qmod.surface import (
    NSClass,
    PointConfig,
    base_locus_evidence,
    blowup_report,
    blowup_verify,
    curve_class,
    expected_system_dim,
    hyperplane_class,
    interpolation_basis,
    lattice_checks,
    ns_canonical,
    ns_genus,
    ns_intersect,
    pencil_discriminant,
    pencil_nondegeneracy,
    residual_class,
    separation_evidence,
    surface_i2,
)
from qmod.quadlab import SymQuadric

FP = PrimeField(DEFAULT_PRIME)


def test_ns_class_algebra():
    a = NSClass(3, (1, 1, 0))
    b = NSClass(1, (0, 1, 1))
    assert a.add(b) == NSClass(4, (1, 2, 1))
    assert a.sub(b) == NSClass(2, (1, 0, -1))
    assert a.scale(2) == NSClass(6, (2, 2, 0))
    with pytest.raises(DomainError):
        NSClass(True, (0,))
    with pytest.raises(DomainError):
        a.add(NSClass(1, (0, 0)))


def test_intersection_pairing():
    a = NSClass(3, (1, 1, 0))
    b = NSClass(1, (0, 1, 1))
    assert ns_intersect(a, b) == 3 - 1
    assert ns_intersect(a, a) == 9 - 2
    assert ns_intersect(a, ns_canonical(3)) == -9 + 2


def test_genus_formula():
    line = NSClass(1, (0,) * 15)
    conic = NSClass(2, (0,) * 15)
    cubic = NSClass(3, (0,) * 15)
    assert ns_genus(line) == 0
    assert ns_genus(conic) == 0
    assert ns_genus(cubic) == 1


def test_embedding_lattice_numbers():
    h = hyperplane_class()
    c = curve_class()
    assert ns_intersect(h, h) == 13
    assert ns_intersect(c, h) == 20
    assert ns_genus(c) == 15
    assert residual_class() == h.scale(2).sub(c)
    checks = lattice_checks()
    assert checks == {"c_dot_h": 20, "h_self": 13, "genus_c": 15,
                      "genus_line": 0, "genus_conic": 0}


def test_expected_system_dims():
    assert expected_system_dim(hyperplane_class()) == 7
    assert expected_system_dim(curve_class()) == 12
    assert expected_system_dim(residual_class()) == 0


def test_point_config_sampling_is_deterministic():
    a = PointConfig.sample(FP, 15, 3)
    b = PointConfig.sample(FP, 15, 3)
    assert a.points == b.points
    assert a.n == 15


def test_point_config_rejects_degenerate_sets():
    with pytest.raises(DomainError):
        PointConfig(FP, [(0, 0, 1), (1, 1, 1), (0, 0, 1)], seed=None)
    with pytest.raises(DomainError):
        PointConfig(FP, [(0, 0, 1), (1, 1, 1), (2, 2, 1)], seed=None)


def test_point_config_needs_sampling_prime():
    with pytest.raises(ConfigurationError):
        PointConfig.sample(PrimeField(101), 15, 0)


def test_interpolation_dimensions_on_sampled_points():
    cfg = PointConfig.sample(FP, 15, 3)
    hs = interpolation_basis(cfg, hyperplane_class())
    assert hs.dim == 7
    cs = interpolation_basis(cfg, curve_class())
    assert cs.dim == 12
    rs = interpolation_basis(cfg, residual_class())
    assert rs.dim == 0


def test_interpolation_small_prime_guard():
    cfg = PointConfig(PrimeField(31), [(1, 2, 1), (3, 5, 1)], seed=None)
    from qmod.surface import _interpolation_kernel
    with pytest.raises(ConfigurationError):
        _interpolation_kernel(cfg, NSClass(31, (1, 1)))


def test_imposing_a_point_drops_dimension():
    cfg = PointConfig.sample(FP, 15, 3)
    hs = interpolation_basis(cfg, hyperplane_class())
    rng = derived_rng(99, "unit-extra-point")
    q = (FP.random_element(rng), FP.random_element(rng), FP.one)
    assert hs.impose_point(q) == hs.dim - 1


def test_members_vanish_to_order():
    cfg = PointConfig.sample(FP, 15, 3)
    hs = interpolation_basis(cfg, hyperplane_class())
    rng = derived_rng(7, "unit-member")
    form = hs.random_member(rng)
    for pt, mult in zip(cfg.points, hyperplane_class().mults):
        assert FP.is_zero(form.evaluate(*pt))
        if mult >= 2:
            for var in range(3):
                assert FP.is_zero(form.partial(var).evaluate(*pt))


def test_surface_quadric_pair():
    cfg = PointConfig.sample(FP, 15, 3)
    qs = surface_i2(cfg)
    assert qs.dim == 2
    hs = interpolation_basis(cfg, hyperplane_class())
    forms = hs.forms()
    rng = derived_rng(11, "unit-i2-points")
    for _ in range(50):
        x0, y0 = FP.random_element(rng), FP.random_element(rng)
        image = [f.evaluate(x0, y0, 1) for f in forms]
        for q in qs.members():
            assert FP.is_zero(q.evaluate(image))


def test_pencil_discriminant_of_proportional_pair_degenerates():
    rng = derived_rng(0, "unit-pencil")
    q = SymQuadric.from_upper_coeffs(
        FP, 3, [FP.random_element(rng) for _ in range(6)])
    # det(s Q + 5 t Q) = (s + 5t)^3 det(Q): a triple root.
    disc = pencil_discriminant(q, q.scale(5))
    assert disc.degree == 3
    assert not disc.squarefree()
    singular = SymQuadric(FP, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    flat = pencil_discriminant(singular, singular.scale(2))
    assert all(FP.is_zero(c) for c in flat.coeffs)


def test_pencil_discriminant_sees_forced_double_root():
    q1 = SymQuadric(FP, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    q2 = SymQuadric(FP, [[3, 0, 0], [0, 3, 0], [0, 0, 5]])
    disc = pencil_discriminant(q1, q2)
    # (s + 3t)^2 (2s + 5t): nonzero but with a repeated root.
    assert not all(FP.is_zero(c) for c in disc.coeffs)
    assert not disc.squarefree()


def test_pencil_discriminant_matches_pointwise_determinant():
    rng = derived_rng(0, "unit-pencil-det")
    q1 = SymQuadric.from_upper_coeffs(
        FP, 4, [FP.random_element(rng) for _ in range(10)])
    q2 = SymQuadric.from_upper_coeffs(
        FP, 4, [FP.random_element(rng) for _ in range(10)])
    disc = pencil_discriminant(q1, q2)
    for _ in range(5):
        s, t = FP.random_element(rng), FP.random_element(rng)
        combo = q1.scale(s).add(q2.scale(t))
        assert disc.evaluate(s, t) == combo.matrix().det()


def test_pencil_nondegeneracy_takes_only_pencils():
    system = i2_basis(ParamCurve.rational_normal(FP, 3))
    with pytest.raises(DomainError):
        pencil_nondegeneracy(system)


def test_base_locus_on_the_embedding_curve_class():
    cfg = PointConfig.sample(FP, 15, 3)
    report = base_locus_evidence(cfg, curve_class(), trials=4, seed=0)
    assert report.passed
    assert all(item.passed for item in report.items)
    payload = report.to_json_dict()
    assert payload["pass"] is True


def test_base_locus_flags_empty_system():
    cfg = PointConfig.sample(FP, 15, 3)
    pinned = NSClass(1, (1, 1, 1) + (0,) * 12)
    report = base_locus_evidence(cfg, pinned, trials=2, seed=0)
    assert not report.passed
    extra_point = next(i for i in report.items if i.name == "extra-points")
    assert not extra_point.passed


def test_base_locus_flags_forced_common_factor():
    cfg = PointConfig.sample(FP, 15, 3)
    line_through_two = NSClass(1, (1, 1) + (0,) * 13)
    report = base_locus_evidence(cfg, line_through_two, trials=2, seed=0)
    assert not report.passed
    common = next(i for i in report.items if i.name == "common-factor")
    assert not common.passed


def test_separation_on_embedding_system():
    cfg = PointConfig.sample(FP, 15, 3)
    hs = interpolation_basis(cfg, hyperplane_class())
    rep = separation_evidence(hs, trials=6, seed=0)
    assert rep.passed and rep.failures == 0
    assert rep.trials == 6


def test_blowup_report_is_complete_on_good_seed():
    rep = blowup_report(3, field=FP)
    assert rep.stage == "complete"
    assert rep.passed
    assert (rep.h_dim, rep.curve_dim, rep.residual_dim, rep.i2_dim) == (7, 12, 0, 2)
    assert rep.pencil is not None and rep.pencil.degree == 7
    payload = rep.to_json_dict()
    assert payload["lattice"]["c_dot_h"] == 20


def test_blowup_verify_deterministic():
    a = blowup_verify(3, field=FP)
    b = blowup_verify(3, field=FP)
    assert a.to_json_dict() == b.to_json_dict()
    assert a.passed
