from fractions import Fraction as Fr

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import spec_by_name
from isotori import quaternion as Q
from isotori.random_specs import random_spec
from isotori.ratmath import RatMat, is_positive_definite
from isotori.torus import (
    InvalidSpecError,
    TorusSpec,
    alpha,
    alpha_parts,
    check_valid,
    form_value,
    immerse,
    mean_curvature,
    metric_blocks,
    project_homogeneous,
    sphere_mean_curvature,
    tangent_frame,
    validate,
)

import random

seeds = st.integers(0, 2**32 - 1)


def rnd_spec(seed, **kw):
    return random_spec(random.Random(seed), **kw)


def circle():
    return TorusSpec.build([1], [[1]], [[]])


# -- validation ---------------------------------------------------------------

def test_valid_catalog(catalog_spec):
    assert validate(catalog_spec) == []


def test_rank_deficient_frequencies():
    spec = TorusSpec.build([1, 1], [[1, 0], [1, 0]], [[], []])
    problems = validate(spec)
    assert len(problems) == 1 and "rank" in problems[0]
    with pytest.raises(InvalidSpecError):
        check_valid(spec)


def test_zero_radius():
    assert any("r" in v for v in validate(TorusSpec.build([0, 1], [[1], [2]], [[], []])))


def test_validate_reports_every_violation():
    spec = TorusSpec.build([0, -1], [[1, 0], [1, 0]], [[1], [1]])
    assert len(validate(spec)) >= 3


def test_l_larger_than_n():
    spec = TorusSpec(1, 2, 0, (Fr(1),), RatMat(((Fr(1), Fr(0)),), 2), RatMat(((),), 0))
    assert validate(spec)


# -- metric -------------------------------------------------------------------

def frame_gram(spec, x, y):
    frame = tangent_frame(spec, x, y)
    return np.array([[Q.real_inner(a, b) for b in frame] for a in frame])


def test_metric_blocks_examples():
    b = metric_blocks(spec_by_name("ex2-2-t22"))
    assert str(b.G1) == "[[6, 3], [3, 6]]"
    b = metric_blocks(spec_by_name("ex3-2-t22-projected"))
    assert b.G2 == RatMat.from_rows([[Fr(3, 2), Fr(1, 2)], [Fr(1, 2), Fr(1, 2)]])
    spec = TorusSpec.build([1, 1, 1], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[]] * 3)
    assert metric_blocks(spec).G1 == RatMat.identity(3)
    assert metric_blocks(spec).G2.shape == (0, 0)


def test_metric_blocks_match_float_frame(catalog_spec):
    rng = np.random.default_rng(3)
    b = metric_blocks(catalog_spec)
    l, m = catalog_spec.l, catalog_spec.m
    expected = np.zeros((l + m, l + m))
    expected[:l, :l] = b.G1.to_float().reshape(l, l)
    expected[l:, l:] = b.G2.to_float().reshape(m, m)
    for _ in range(10):
        x, y = rng.uniform(0, 2 * np.pi, l), rng.uniform(0, 2 * np.pi, m)
        np.testing.assert_allclose(frame_gram(catalog_spec, x, y), expected, atol=1e-10)


@settings(max_examples=50)
@given(seeds)
def test_blocks_positive_definite(seed):
    spec = rnd_spec(seed)
    b = metric_blocks(spec)
    assert is_positive_definite(b.G1) and is_positive_definite(b.G2)


# -- alpha --------------------------------------------------------------------

def test_alpha_examples():
    assert alpha(spec_by_name("ex2-3-t33")) == (Fr(4, 3), Fr(4, 3), Fr(2), Fr(8, 3))
    assert set(alpha(spec_by_name("ex3-1-t33-minimal"))) == {Fr(6, 5)}
    assert set(alpha(spec_by_name("ex3-3-t23-minimal"))) == {Fr(5)}


def test_alpha_matches_float_linear_algebra(catalog_spec):
    s = catalog_spec
    w = np.array([float(r) for r in s.r_sq])
    total = np.zeros(s.n)
    for M in (s.E_float, s.F_float):
        if M.shape[1]:
            G = (M * w[:, None]).T @ M
            total += np.einsum("dp,pq,dq->d", M, np.linalg.inv(G), M)
    np.testing.assert_allclose([float(a) for a in alpha(s)], total, rtol=1e-12)


@settings(max_examples=50)
@given(seeds)
def test_trace_identity(seed):
    spec = rnd_spec(seed)
    ae, af = alpha_parts(spec)
    assert sum(w * a for w, a in zip(spec.r_sq, ae)) == spec.l
    assert sum(w * a for w, a in zip(spec.r_sq, af)) == spec.m
    assert sum(w * a for w, a in zip(spec.r_sq, alpha(spec))) == spec.dim


# -- immersion ----------------------------------------------------------------

def test_immerse_at_origin(catalog_spec):
    psi = immerse(catalog_spec, np.zeros(catalog_spec.l), np.zeros(catalog_spec.m))
    expected = np.zeros((catalog_spec.n, 4))
    expected[:, 0] = catalog_spec.r
    np.testing.assert_allclose(psi, expected, atol=1e-15)


@settings(max_examples=30)
@given(seeds, st.integers(0, 1000))
def test_immerse_component_norms(seed, pt):
    spec = rnd_spec(seed)
    rng = np.random.default_rng(pt)
    psi = immerse(spec, rng.uniform(0, 7, spec.l), rng.uniform(0, 7, spec.m))
    np.testing.assert_allclose(np.linalg.norm(psi, axis=-1), spec.r, atol=1e-12)


def test_immerse_periodic():
    spec = spec_by_name("ex2-2-t22")  # integer frequencies: 2 pi Z^l is a period lattice
    x, y = np.array([0.3, 1.1]), np.array([2.0, -0.4])
    for p in range(2):
        np.testing.assert_allclose(immerse(spec, x + 2 * np.pi * np.eye(2)[p], y),
                                   immerse(spec, x, y), atol=1e-12)
        np.testing.assert_allclose(immerse(spec, x, y + 2 * np.pi * np.eye(2)[p]),
                                   immerse(spec, x, y), atol=1e-12)


def test_frame_circle():
    np.testing.assert_allclose(tangent_frame(circle(), [0.0], [])[0], [Q.J], atol=1e-15)


def test_frame_matches_finite_differences(catalog_spec):
    s = catalog_spec
    rng = np.random.default_rng(7)
    x, y = rng.uniform(0, 2 * np.pi, s.l), rng.uniform(0, 2 * np.pi, s.m)
    frame = tangent_frame(s, x, y)
    h = 1e-6
    for p in range(s.l):
        d = np.eye(s.l)[p] * h
        np.testing.assert_allclose(frame[p], (immerse(s, x + d, y) - immerse(s, x - d, y)) / (2 * h), atol=1e-8)
    for q in range(s.m):
        d = np.eye(s.m)[q] * h
        np.testing.assert_allclose(frame[s.l + q], (immerse(s, x, y + d) - immerse(s, x, y - d)) / (2 * h),
                                   atol=1e-8)


def test_cross_block_vanishes(catalog_spec):
    s = catalog_spec
    G = frame_gram(s, np.full(s.l, 0.7), np.full(s.m, -1.3))
    np.testing.assert_allclose(G[:s.l, s.l:], 0, atol=1e-12)


# -- Kaehler forms on the frame ------------------------------------------------

def test_j_and_k_forms_vanish_on_frame(catalog_spec):
    s = catalog_spec
    rng = np.random.default_rng(11)
    for _ in range(5):
        frame = tangent_frame(s, rng.uniform(0, 7, s.l), rng.uniform(0, 7, s.m))
        for a in frame:
            for b in frame:
                assert abs(form_value("J", a, b)) < 1e-12
                assert abs(form_value("K", a, b)) < 1e-12


def test_left_k_form_is_not_isotropic():
    # with k acting on the left, omega_K(d_x, d_y) = -sum r^2 e f sin 2(e, x)
    s = spec_by_name("corollary-tnn")
    x, y = np.array([0.4, 1.0]), np.array([0.2, 2.5])
    frame = tangent_frame(s, x, y)
    ang = s.E_float @ x
    for p in range(2):
        for q in range(2):
            closed = -np.sum(s.r**2 * s.E_float[:, p] * s.F_float[:, q] * np.sin(2 * ang))
            got = Q.kahler_form("K", frame[p], frame[2 + q], side="left")
            assert got == pytest.approx(closed, abs=1e-12)
    assert abs(Q.kahler_form("K", frame[0], frame[2], side="left")) > 0.1


def test_omega_i_closed_form():
    s = spec_by_name("ex3-2-t22-projected")
    x, y = np.array([0.9, -0.3]), np.array([1.7, 0.1])
    frame = tangent_frame(s, x, y)
    cos2 = np.cos(2 * (s.E_float @ x))
    for p in range(2):
        for q in range(2):
            closed = np.sum(s.r**2 * s.E_float[:, p] * s.F_float[:, q] * cos2)
            assert form_value("I", frame[p], frame[2 + q]) == pytest.approx(closed, abs=1e-12)


# -- mean curvature -----------------------------------------------------------

def test_circle_curvature():
    psi = immerse(circle(), [0.8], [])
    np.testing.assert_allclose(mean_curvature(circle(), [0.8], []), -psi, atol=1e-15)


def test_h_psi_is_minus_one(catalog_spec):
    s = catalog_spec
    rng = np.random.default_rng(5)
    for _ in range(10):
        x, y = rng.uniform(0, 7, s.l), rng.uniform(0, 7, s.m)
        assert Q.real_inner(mean_curvature(s, x, y), immerse(s, x, y)) == pytest.approx(-1, abs=1e-12)


def test_sphere_mean_curvature_vanishes_on_minimal_torus():
    s = spec_by_name("ex3-1-t33-minimal")
    Hs = sphere_mean_curvature(s, 5, np.array([0.1, 0.2, 0.3]), np.array([1.0, 2.0, 3.0]))
    np.testing.assert_allclose(Hs, 0, atol=1e-15)


def test_sphere_mean_curvature_projection(catalog_spec):
    s = catalog_spec
    r2 = sum(s.r_sq)
    x, y = np.full(s.l, 0.37), np.full(s.m, 1.9)
    psi = immerse(s, x, y)
    Hs = sphere_mean_curvature(s, r2, x, y)
    np.testing.assert_allclose(Hs, mean_curvature(s, x, y) + psi / float(r2), atol=1e-12)
    assert abs(Q.real_inner(Hs, psi)) < 1e-12


def test_sphere_mean_curvature_wrong_radius():
    with pytest.raises(ValueError):
        sphere_mean_curvature(spec_by_name("ex3-2-t22-projected"), 2, [0, 0], [0, 0])


# -- homogeneous projections --------------------------------------------------

def test_project_homogeneous_x():
    s = spec_by_name("ex2-2-t22")
    px = project_homogeneous(s, "X")
    assert (px.n, px.l, px.m) == (4, 2, 0)
    assert px.E == s.E and px.r_sq == s.r_sq
    assert project_homogeneous(px, "X") == px


@settings(max_examples=30)
@given(seeds)
def test_projection_keeps_blocks(seed):
    s = rnd_spec(seed)
    b = metric_blocks(s)
    ae, af = alpha_parts(s)
    if s.l:
        px = project_homogeneous(s, "X")
        assert metric_blocks(px).G1 == b.G1
        assert alpha(px) == ae
    if s.m:
        py = project_homogeneous(s, "Y")
        assert metric_blocks(py).G2 == b.G2
        assert alpha(py) == af
