"""Floating-point checks of the closed forms against the literal immersion.

Each check samples points uniformly from [0, 2pi)^{l+m} with a seeded
generator, evaluates a residual that should vanish (or should not), and
sorts it into one of three bands:

    residual <= tolerance         -> "zero"
    residual >= far_threshold     -> "nonzero"
    otherwise                     -> "indeterminate"

A check that carries an exact expectation (from :mod:`isotori.certify` or
from an identity that must hold) then reports AGREE / DISAGREE, or
INDETERMINATE when the residual sits in the gap.  Float noise is never
allowed to overrule an exact certificate silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import certify
from . import quaternion as Q
from .torus import (
    TorusSpec,
    act,
    alpha,
    check_valid,
    form_value,
    immerse,
    mean_curvature,
    metric_blocks,
    sphere_mean_curvature,
    tangent_frame,
)

AGREE = "AGREE"
DISAGREE = "DISAGREE"
INDETERMINATE = "INDETERMINATE"
INFORMATIONAL = "INFO"


@dataclass(frozen=True)
class OracleParams:
    sample_count: int = 10
    fd_step: float = 1e-4
    tolerance: float = 1e-6           # finite-difference comparisons (relative)
    identity_tolerance: float = 1e-8  # algebraic identities, no differentiation
    far_threshold: float = 1e-3
    rng_seed: int = 42

    def __post_init__(self):
        if self.sample_count < 1:
            raise ValueError("sample_count must be positive")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")
        if not (0 < self.tolerance < self.far_threshold and 0 < self.identity_tolerance < self.far_threshold):
            raise ValueError("tolerances must be positive and below far_threshold")


@dataclass(frozen=True)
class ResidualReport:
    check: str
    residual: float
    worst_point: tuple
    tolerance: float
    far_threshold: float
    expect_zero: Optional[bool] = None
    note: str = ""

    def __post_init__(self):
        if not self.residual >= 0:
            raise ValueError(f"residual must be non-negative, got {self.residual}")

    @property
    def band(self) -> str:
        if self.residual <= self.tolerance:
            return "zero"
        if self.residual >= self.far_threshold:
            return "nonzero"
        return "indeterminate"

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    @property
    def outcome(self) -> str:
        if self.expect_zero is None:
            return INFORMATIONAL
        if self.band == "indeterminate":
            return INDETERMINATE
        return AGREE if (self.band == "zero") == self.expect_zero else DISAGREE


def sample_points(spec: TorusSpec, params: OracleParams) -> list[tuple[np.ndarray, np.ndarray]]:
    rng = np.random.default_rng(params.rng_seed)
    pts = rng.uniform(0.0, 2.0 * np.pi, size=(params.sample_count, spec.dim))
    return [(p[:spec.l], p[spec.l:]) for p in pts]


def _worst(values, points):
    i = int(np.argmax(values))
    x, y = points[i]
    return float(values[i]), tuple(float(t) for t in np.concatenate([x, y]))


def _float_inverse_blocks(spec: TorusSpec):
    blocks = metric_blocks(spec)
    return (blocks.G1_inv.to_float().reshape(spec.l, spec.l),
            blocks.G2_inv.to_float().reshape(spec.m, spec.m))


# -- mean curvature -----------------------------------------------------------

def fd_laplacian(spec: TorusSpec, x, y, h: float, inv_blocks=None) -> np.ndarray:
    """Laplace-Beltrami of the immersion from central differences.

    ``sum G1^{pq} d_p d_q psi + sum G2^{rs} d_r d_s psi`` with the inverse
    blocks computed exactly and converted to floats afterwards.
    """
    G1i, G2i = inv_blocks if inv_blocks is not None else _float_inverse_blocks(spec)
    z0 = np.concatenate([np.asarray(x, float).reshape(spec.l), np.asarray(y, float).reshape(spec.m)])
    Ginv = np.zeros((spec.dim, spec.dim))
    Ginv[:spec.l, :spec.l] = G1i
    Ginv[spec.l:, spec.l:] = G2i

    def psi(z):
        return immerse(spec, z[:spec.l], z[spec.l:])

    center = psi(z0)
    eye = np.eye(spec.dim) * h
    out = np.zeros_like(center)
    for a in range(spec.dim):
        for b in range(a, spec.dim):
            if Ginv[a, b] == 0.0:
                continue
            if a == b:
                d2 = (psi(z0 + eye[a]) - 2.0 * center + psi(z0 - eye[a])) / h**2
                out += Ginv[a, a] * d2
            else:
                d2 = (psi(z0 + eye[a] + eye[b]) - psi(z0 + eye[a] - eye[b])
                      - psi(z0 - eye[a] + eye[b]) + psi(z0 - eye[a] - eye[b])) / (4.0 * h**2)
                out += 2.0 * Ginv[a, b] * d2
    return out


def fd_mean_curvature(spec: TorusSpec, x, y, h: float = 1e-4, inv_blocks=None) -> np.ndarray:
    return fd_laplacian(spec, x, y, h, inv_blocks) / spec.dim


def mean_curvature_residual(spec: TorusSpec, params: OracleParams, h: float | None = None) -> ResidualReport:
    """Max relative error between the finite-difference and closed-form mean curvature."""
    h = params.fd_step if h is None else h
    pts = sample_points(spec, params)
    inv = _float_inverse_blocks(spec)
    errs = []
    for x, y in pts:
        H = mean_curvature(spec, x, y)
        errs.append(np.linalg.norm(fd_mean_curvature(spec, x, y, h, inv) - H) / np.linalg.norm(H))
    res, where = _worst(np.array(errs), pts)
    return ResidualReport(f"mean_curvature_fd[h={h:g}]", res, where, params.tolerance,
                          params.far_threshold, expect_zero=True)


def convergence_ratio(spec: TorusSpec, params: OracleParams, h: float) -> float:
    """``residual(h) / residual(h/2)``; about 4 for a second-order stencil."""
    return (mean_curvature_residual(spec, params, h).residual
            / mean_curvature_residual(spec, params, h / 2).residual)


# -- algebraic identities -------------------------------------------------------

def h_psi_identity(spec: TorusSpec, params: OracleParams) -> ResidualReport:
    """``(H, psi) = -1`` at every point."""
    pts = sample_points(spec, params)
    vals = np.array([abs(Q.real_inner(mean_curvature(spec, x, y), immerse(spec, x, y)) + 1.0)
                     for x, y in pts])
    res, where = _worst(vals, pts)
    return ResidualReport("h_psi_identity", res, where, params.identity_tolerance,
                          params.far_threshold, expect_zero=True)


def isotropy_residual(spec: TorusSpec, params: OracleParams) -> list[ResidualReport]:
    """omega_J and omega_K on all tangent pairs, and two omega_I checks.

    omega_I(d_x_p psi, d_y_q psi) depends on x, so it is compared with the
    exact obstruction matrix on the slice x = 0, where the two must match.
    The last report samples omega_I on all pairs and is judged against the
    exact verdict of :func:`isotori.certify.omega_I_isotropic`.
    """
    pts = sample_points(spec, params)
    wJ, wK, wI, wI_all = [], [], [], []
    C = certify.omega_I_obstruction(spec).to_float().reshape(spec.l, spec.m)
    for x, y in pts:
        frame = tangent_frame(spec, x, y)
        for vals, form in ((wJ, "J"), (wK, "K"), (wI_all, "I")):
            vals.append(max((abs(form_value(form, a, b)) for a in frame for b in frame), default=0.0))
        frame0 = tangent_frame(spec, np.zeros(spec.l), y)
        wI.append(max((abs(form_value("I", frame0[p], frame0[spec.l + q]) - C[p, q])
                       for p in range(spec.l) for q in range(spec.m)), default=0.0))
    out = []
    for label, vals in (("omega_J_isotropy", wJ), ("omega_K_isotropy", wK),
                        ("omega_I_vs_obstruction", wI)):
        res, where = _worst(np.array(vals), pts)
        out.append(ResidualReport(label, res, where, params.identity_tolerance,
                                  params.far_threshold, expect_zero=True))
    res, where = _worst(np.array(wI_all), pts)
    out.append(ResidualReport("omega_I_isotropy", res, where, params.identity_tolerance,
                              params.far_threshold, expect_zero=certify.omega_I_isotropic(spec)))
    return out


def trace_identity(spec: TorusSpec) -> Fraction:
    """``sum_d r_d^2 alpha_d - (l+m)``, exact; always zero."""
    return sum((w * a for w, a in zip(spec.r_sq, alpha(spec))), Fraction(0)) - spec.dim


def _require_sphere(spec: TorusSpec, unit: bool = False) -> Fraction:
    r2 = certify.sphere_radius_sq(spec)
    if unit and r2 != 1:
        raise ValueError(f"needs a torus in the unit sphere, sum r^2 = {r2}")
    return r2


def sphere_identities(spec: TorusSpec, params: OracleParams) -> list[ResidualReport]:
    """Tangency of the in-sphere mean curvature to the sphere and its projection formula."""
    r2 = _require_sphere(spec)
    pts = sample_points(spec, params)
    tang, proj = [], []
    for x, y in pts:
        psi = immerse(spec, x, y)
        Hs = sphere_mean_curvature(spec, r2, x, y)
        H = mean_curvature(spec, x, y)
        tang.append(abs(Q.real_inner(Hs, psi)))
        proj.append(np.abs(Hs - (H + psi / float(r2))).max())
    out = []
    for label, vals in (("sphere_H_psi_orthogonal", tang), ("sphere_H_projection", proj)):
        res, where = _worst(np.array(vals), pts)
        out.append(ResidualReport(label, res, where, params.identity_tolerance,
                                  params.far_threshold, expect_zero=True))
    return out


def sphere_minimality_residual(spec: TorusSpec, params: OracleParams) -> ResidualReport:
    """Max norm of the in-sphere mean curvature built from finite differences.

    ``H_fd - ((H_fd, psi) / r^2) psi`` uses no closed form, so it checks the
    exact minimality verdict independently.
    """
    r2 = float(_require_sphere(spec))
    pts = sample_points(spec, params)
    inv = _float_inverse_blocks(spec)
    vals = []
    for x, y in pts:
        psi = immerse(spec, x, y)
        H = fd_mean_curvature(spec, x, y, params.fd_step, inv)
        vals.append(np.linalg.norm(H - Q.real_inner(H, psi) / r2 * psi))
    res, where = _worst(np.array(vals), pts)
    return ResidualReport("sphere_mean_curvature_fd", res, where, params.tolerance,
                          params.far_threshold, expect_zero=certify.minimal_in_sphere(spec))


# -- H-minimality mechanism -----------------------------------------------------

def _field(spec: TorusSpec, form: str, use_sphere: bool, x, y) -> np.ndarray:
    if use_sphere:
        return act(form, sphere_mean_curvature(spec, certify.sphere_radius_sq(spec), x, y))
    return act(form, mean_curvature(spec, x, y))


def _expected_hmin(spec: TorusSpec, form: str, use_sphere: bool) -> Optional[bool]:
    if use_sphere:
        return certify.hmin_projected(spec, form).holds
    return certify.hmin_ambient(spec, form).holds


def normal_remainder(field: np.ndarray, frame: list[np.ndarray]) -> float:
    """Relative norm of the part of ``field`` orthogonal to the span of ``frame``."""
    T = np.stack([f.ravel() for f in frame], axis=1)
    G = T.T @ T
    if np.linalg.matrix_rank(G) < T.shape[1]:
        raise np.linalg.LinAlgError("tangent frame is degenerate; spec is not valid")
    v = field.ravel()
    norm = np.linalg.norm(v)
    if norm == 0.0:
        return 0.0
    coeffs = np.linalg.solve(G, T.T @ v)
    return float(np.linalg.norm(v - T @ coeffs) / norm)


def tangency_residual(spec: TorusSpec, form: str, use_sphere: bool, params: OracleParams) -> ResidualReport:
    """Is ``v H`` (or ``v H_sphere``) tangent to the torus?  Compared with the exact H-minimality verdict."""
    form = form.upper()
    if use_sphere:
        _require_sphere(spec, unit=True)
    pts = sample_points(spec, params)
    vals = [normal_remainder(_field(spec, form, use_sphere, x, y), tangent_frame(spec, x, y))
            for x, y in pts]
    res, where = _worst(np.array(vals), pts)
    kind = "projected" if use_sphere else "ambient"
    return ResidualReport(f"tangency_{kind}_{form}", res, where, params.tolerance,
                          params.far_threshold, expect_zero=_expected_hmin(spec, form, use_sphere))


def divergence_residual(spec: TorusSpec, form: str, use_sphere: bool, params: OracleParams) -> ResidualReport:
    """Max ``|(d_c (v H), d_c' psi)|`` over coordinate pairs, derivative by central differences.

    All of these vanishing means the induced covariant derivative of ``v H``
    is zero, so its divergence (the codifferential of omega_v(H, .)) is too.
    """
    form = form.upper()
    if use_sphere:
        _require_sphere(spec, unit=True)
    h = params.fd_step
    pts = sample_points(spec, params)
    eye = np.eye(spec.dim) * h
    vals = []
    for x, y in pts:
        z0 = np.concatenate([x, y])
        frame = tangent_frame(spec, x, y)
        worst = 0.0
        for c in range(spec.dim):
            zp, zm = z0 + eye[c], z0 - eye[c]
            dV = (_field(spec, form, use_sphere, zp[:spec.l], zp[spec.l:])
                  - _field(spec, form, use_sphere, zm[:spec.l], zm[spec.l:])) / (2.0 * h)
            worst = max(worst, max(abs(float(Q.real_inner(dV, t))) for t in frame))
        vals.append(worst)
    res, where = _worst(np.array(vals), pts)
    kind = "projected" if use_sphere else "ambient"
    return ResidualReport(f"divergence_{kind}_{form}", res, where, params.tolerance,
                          params.far_threshold, expect_zero=True)


def hopf_fiber_orthogonality(spec: TorusSpec, v: str, params: OracleParams) -> ResidualReport:
    """Max ``|(v psi, t)|`` over tangent vectors ``t``: zero iff the torus is pi_v-horizontal.

    The fiber direction is ``v psi`` with ``v`` acting from its side in
    :data:`isotori.torus.FORM_SIDE`.
    """
    v = v.upper()
    _require_sphere(spec, unit=True)
    pts = sample_points(spec, params)
    vals = []
    for x, y in pts:
        fiber = act(v, immerse(spec, x, y))
        vals.append(max(abs(float(Q.real_inner(fiber, t))) for t in tangent_frame(spec, x, y)))
    res, where = _worst(np.array(vals), pts)
    expect = certify.horizontality(spec, v) if v in ("J", "K") else None
    return ResidualReport(f"hopf_fiber_{v}", res, where, params.identity_tolerance,
                          params.far_threshold, expect_zero=expect)


# -- everything that applies ----------------------------------------------------

def run_all(spec: TorusSpec, params: OracleParams) -> list[ResidualReport]:
    """Every oracle section applicable to ``spec``, in a fixed order."""
    check_valid(spec)
    reports = [mean_curvature_residual(spec, params), h_psi_identity(spec, params)]
    reports += isotropy_residual(spec, params)
    r2 = certify.sphere_radius_sq(spec)
    for form in certify.FORMS:
        reports.append(tangency_residual(spec, form, False, params))
        if certify.hmin_ambient(spec, form).holds:
            reports.append(divergence_residual(spec, form, False, params))
    reports += sphere_identities(spec, params)
    reports.append(sphere_minimality_residual(spec, params))
    if r2 == 1:
        for v in ("I", "J", "K"):
            reports.append(hopf_fiber_orthogonality(spec, v, params))
        for form in certify.FORMS:
            if certify.horizontality(spec, form):
                reports.append(tangency_residual(spec, form, True, params))
                if certify.hmin_projected(spec, form).holds:
                    reports.append(divergence_residual(spec, form, True, params))
    return reports
