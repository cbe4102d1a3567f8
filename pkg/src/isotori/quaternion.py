"""Floating-point quaternion algebra on H^n.

A quaternion is a length-4 float array ``(w, x, y, z)`` for
``w + x i + y j + z k``; a point or tangent vector of H^n is an ``(n, 4)``
array.  Every function broadcasts over leading axes.
"""

from __future__ import annotations

import numpy as np

ONE = np.array([1.0, 0.0, 0.0, 0.0])
I = np.array([0.0, 1.0, 0.0, 0.0])
J = np.array([0.0, 0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 0.0, 1.0])

UNITS = {"1": ONE, "I": I, "J": J, "K": K}


def quat(w=0.0, x=0.0, y=0.0, z=0.0) -> np.ndarray:
    return np.array([w, x, y, z], dtype=float)


def mul(a, b) -> np.ndarray:
    """Hamilton product, ``i^2 = j^2 = k^2 = ijk = -1``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ], axis=-1)


def conj(a) -> np.ndarray:
    return np.asarray(a, dtype=float) * np.array([1.0, -1.0, -1.0, -1.0])


def exp_unit(axis: str, theta) -> np.ndarray:
    """``cos(theta) + axis * sin(theta)`` for ``axis`` in ``{"I", "J", "K"}``."""
    theta = np.asarray(theta, dtype=float)
    u = UNITS[axis.upper()]
    return np.cos(theta)[..., None] * ONE + np.sin(theta)[..., None] * u


def _check_same_length(x, y):
    if np.shape(x) != np.shape(y):
        raise ValueError(f"length mismatch: {np.shape(x)} vs {np.shape(y)}")


def herm_inner(x, y) -> np.ndarray:
    """``sum_d x_d * conj(y_d)`` over the second-to-last axis."""
    _check_same_length(x, y)
    return mul(x, conj(y)).sum(axis=-2)


def real_inner(x, y) -> np.ndarray:
    """Euclidean inner product on H^n = R^{4n}."""
    _check_same_length(x, y)
    return np.sum(np.asarray(x) * np.asarray(y), axis=(-2, -1))


def form_values(x, y) -> tuple:
    """``(g, w_I, w_J, w_K)`` from ``<x,y> = g - w_I i - w_J j - w_K k``."""
    h = herm_inner(x, y)
    return h[..., 0], -h[..., 1], -h[..., 2], -h[..., 3]


def apply_structure(v: str, x, side: str = "left") -> np.ndarray:
    """Act on every component of ``x`` by the unit ``v`` in ``{"I", "J", "K"}``.

    ``side="left"`` gives ``v * x_d``, the hyperkaehler triple with
    ``I o J = K``; ``side="right"`` gives ``x_d * v``.
    """
    u = UNITS[v.upper()]
    if side == "left":
        return mul(u, x)
    if side == "right":
        return mul(x, u)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def kahler_form(v: str, x, y, side: str = "left") -> np.ndarray:
    """``(v x, y)`` for the structure selected by ``v`` and ``side``."""
    return real_inner(apply_structure(v, x, side), y)
