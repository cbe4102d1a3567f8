"""The flat tori T^{l,m} in H^n: exact data model and closed-form geometry.

The immersion is

    psi(x, y)_d = r_d * exp(j (e_d, x)) * exp(k (f_d, y)),   d = 1..n,

with ``x`` in R^l, ``y`` in R^m.  Only the squared radii are stored, so the
whole exact layer stays rational even when the radii are not.

Structures.  Left multiplication by ``j`` and *right* multiplication by
``k`` are the two orthogonal complex structures for which every such torus
is isotropic: the x-tangents are ``j psi_d`` scaled and the y-tangents are
``psi_d k`` scaled.  Left multiplication by ``k`` does not have this
property (see ``tests/test_torus.py::test_left_k_form_is_not_isotropic``).
:data:`FORM_SIDE` fixes which side each form acts from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import quaternion as Q
from .ratmath import RatMat, inverse, quad_form, rank, vec

FORM_SIDE = {"I": "left", "J": "left", "K": "right"}


class InvalidSpecError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class TorusSpec:
    n: int
    l: int
    m: int
    r_sq: tuple
    E: RatMat
    F: RatMat
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "r_sq", vec(self.r_sq))
        if not isinstance(self.E, RatMat):
            object.__setattr__(self, "E", RatMat.from_rows(self.E, self.l))
        if not isinstance(self.F, RatMat):
            object.__setattr__(self, "F", RatMat.from_rows(self.F, self.m))

    @classmethod
    def build(cls, r_sq, E, F, name: str = "") -> "TorusSpec":
        """Infer ``n, l, m`` from the data; ``E``/``F`` may be RatMat or row lists."""
        n = len(r_sq)
        E = E if isinstance(E, RatMat) else RatMat.from_rows(E, len(E[0]) if len(E) and len(E[0]) else 0)
        F = F if isinstance(F, RatMat) else RatMat.from_rows(F, len(F[0]) if len(F) and len(F[0]) else 0)
        return cls(n, E.ncols, F.ncols, r_sq, E, F, name)

    @property
    def dim(self) -> int:
        return self.l + self.m

    @cached_property
    def r(self) -> np.ndarray:
        return np.sqrt(np.array([float(q) for q in self.r_sq]))

    @cached_property
    def E_float(self) -> np.ndarray:
        return self.E.to_float().reshape(self.n, self.l)

    @cached_property
    def F_float(self) -> np.ndarray:
        return self.F.to_float().reshape(self.n, self.m)

    def scaled(self, c) -> "TorusSpec":
        """Same frequencies, squared radii multiplied by ``c``."""
        c = Fraction(c)
        return TorusSpec(self.n, self.l, self.m, tuple(c * q for q in self.r_sq), self.E, self.F,
                         self.name)


def validate(spec: TorusSpec) -> list[str]:
    """Every violated invariant of ``spec``; empty when valid."""
    out = []
    n, l, m = spec.n, spec.l, spec.m
    if n < 1:
        out.append(f"n must be positive, got {n}")
    if l < 0 or m < 0:
        out.append(f"l and m must be non-negative, got l={l}, m={m}")
    if l > n:
        out.append(f"l={l} exceeds n={n}")
    if m > n:
        out.append(f"m={m} exceeds n={n}")
    if l + m < 1:
        out.append("l + m must be at least 1")
    if len(spec.r_sq) != n:
        out.append(f"r_squared has {len(spec.r_sq)} entries, expected n={n}")
    for d, q in enumerate(spec.r_sq, start=1):
        if q <= 0:
            out.append(f"r_squared[{d}] = {q} is not positive")
    shapes_ok = True
    if spec.E.shape != (n, l):
        out.append(f"E has shape {spec.E.shape}, expected ({n}, {l})")
        shapes_ok = False
    if spec.F.shape != (n, m):
        out.append(f"F has shape {spec.F.shape}, expected ({n}, {m})")
        shapes_ok = False
    if shapes_ok:
        rE, rF = rank(spec.E), rank(spec.F)
        if rE != l:
            out.append(f"rank(E) = {rE} < l = {l}: rows of E do not span R^{l}")
        if rF != m:
            out.append(f"rank(F) = {rF} < m = {m}: rows of F do not span R^{m}")
    return out


def check_valid(spec: TorusSpec) -> TorusSpec:
    problems = validate(spec)
    if problems:
        raise InvalidSpecError(problems)
    return spec


# -- exact geometry ---------------------------------------------------------

@dataclass(frozen=True)
class MetricBlocks:
    G1: RatMat
    G2: RatMat
    G1_inv: RatMat = field(repr=False)
    G2_inv: RatMat = field(repr=False)


def _gram(M: RatMat, weights) -> RatMat:
    k = M.ncols
    rows = [[sum((w * M[d, p] * M[d, q] for d, w in enumerate(weights)), Fraction(0))
             for q in range(k)] for p in range(k)]
    return RatMat(tuple(tuple(r) for r in rows), k)


def metric_blocks(spec: TorusSpec) -> MetricBlocks:
    """``G1 = sum r_d^2 e_d e_d^T`` and ``G2 = sum r_d^2 f_d f_d^T``."""
    G1 = _gram(spec.E, spec.r_sq)
    G2 = _gram(spec.F, spec.r_sq)
    return MetricBlocks(G1, G2, inverse(G1), inverse(G2))


def alpha_parts(spec: TorusSpec, blocks: MetricBlocks | None = None) -> tuple[tuple, tuple]:
    """``(|e_d|^2_{G1^-1})_d`` and ``(|f_d|^2_{G2^-1})_d``."""
    blocks = blocks or metric_blocks(spec)
    ae = tuple(quad_form(blocks.G1_inv, spec.E.row(d)) for d in range(spec.n))
    af = tuple(quad_form(blocks.G2_inv, spec.F.row(d)) for d in range(spec.n))
    return ae, af


def alpha(spec: TorusSpec, blocks: MetricBlocks | None = None) -> tuple:
    ae, af = alpha_parts(spec, blocks)
    return tuple(a + b for a, b in zip(ae, af))


def project_homogeneous(spec: TorusSpec, side: str) -> TorusSpec:
    """The homogeneous torus ``psi(x, 0)`` (side ``"X"``) or ``psi(0, y)`` (``"Y"``)."""
    side = side.upper()
    if (side, spec.m) == ("X", 0) or (side, spec.l) == ("Y", 0):
        return spec  # already homogeneous on that side
    if side == "X":
        return TorusSpec(spec.n, spec.l, 0, spec.r_sq, spec.E, RatMat.zeros(spec.n, 0),
                         f"{spec.name}/X" if spec.name else "")
    if side == "Y":
        return TorusSpec(spec.n, 0, spec.m, spec.r_sq, RatMat.zeros(spec.n, 0), spec.F,
                         f"{spec.name}/Y" if spec.name else "")
    raise ValueError(f"side must be 'X' or 'Y', got {side!r}")


# -- float geometry ---------------------------------------------------------

def _float_alpha(spec: TorusSpec) -> np.ndarray:
    return np.array([float(a) for a in alpha(spec)])


def _exponentials(spec: TorusSpec, x, y):
    x = np.asarray(x, dtype=float).reshape(spec.l)
    y = np.asarray(y, dtype=float).reshape(spec.m)
    u = Q.exp_unit("J", spec.E_float @ x)
    w = Q.exp_unit("K", spec.F_float @ y)
    return u, w


def immerse(spec: TorusSpec, x, y) -> np.ndarray:
    u, w = _exponentials(spec, x, y)
    return spec.r[:, None] * Q.mul(u, w)


def tangent_frame(spec: TorusSpec, x, y) -> list[np.ndarray]:
    """``[d psi/d x_1, ..., d psi/d x_l, d psi/d y_1, ..., d psi/d y_m]``.

    Differentiated in place: the ``j`` of the first exponential comes out
    on the left, the ``k`` of the second stays between the two factors.
    """
    u, w = _exponentials(spec, x, y)
    r = spec.r[:, None]
    dx_base = r * Q.mul(Q.J, Q.mul(u, w))
    dy_base = r * Q.mul(u, Q.mul(Q.K, w))
    frame = [spec.E_float[:, p, None] * dx_base for p in range(spec.l)]
    frame += [spec.F_float[:, q, None] * dy_base for q in range(spec.m)]
    return frame


def mean_curvature(spec: TorusSpec, x, y) -> np.ndarray:
    """Mean curvature vector in H^n: ``-(alpha_d / (l+m)) psi_d``."""
    if spec.dim == 0:
        raise ValueError("mean curvature needs l + m >= 1")
    return -(_float_alpha(spec) / spec.dim)[:, None] * immerse(spec, x, y)


def sphere_beta(spec: TorusSpec, r_sq_total) -> tuple:
    """Exact coefficients ``1/r^2 - alpha_d/(l+m)`` of the in-sphere mean curvature."""
    r_sq_total = Fraction(r_sq_total)
    if sum(spec.r_sq) != r_sq_total:
        raise ValueError(f"torus lies on the sphere of squared radius {sum(spec.r_sq)}, "
                         f"not {r_sq_total}")
    return tuple(1 / r_sq_total - a / spec.dim for a in alpha(spec))


def sphere_mean_curvature(spec: TorusSpec, r_sq_total, x, y) -> np.ndarray:
    beta = np.array([float(b) for b in sphere_beta(spec, r_sq_total)])
    return beta[:, None] * immerse(spec, x, y)


def act(form: str, vectors: np.ndarray) -> np.ndarray:
    """Apply the complex structure that goes with ``form`` (see :data:`FORM_SIDE`)."""
    form = form.upper()
    return Q.apply_structure(form, vectors, FORM_SIDE[form])


def form_value(form: str, a: np.ndarray, b: np.ndarray) -> float:
    """Kaehler form ``(v a, b)`` with ``v`` acting from its :data:`FORM_SIDE`."""
    form = form.upper()
    return float(Q.kahler_form(form, a, b, FORM_SIDE[form]))
