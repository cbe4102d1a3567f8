"""Structured reports: a nested tree, rendered as ``key: value`` lines or JSON.

Key order is fixed so that two runs with the same seed produce
byte-identical output.
"""

from __future__ import annotations

import json
from typing import Iterable

from .certify import Classification, Decision, NotApplicable, Solution, Violation
from .oracle import OracleParams, ResidualReport
from .ratmath import RatMat, format_rat

REPORT_VERSION = "isotori-report/1"

PROJECTED_MINIMALITY_CONVENTION = (
    "a Hopf projection is reported minimal exactly when its horizontal lift "
    "is minimal in the unit sphere"
)
K_STRUCTURE_CONVENTION = "J acts by left multiplication by j, K by right multiplication by k"


def _rats(values) -> list[str]:
    return [format_rat(v) for v in values]


def _mat(M: RatMat) -> list[list[str]]:
    return [_rats(r) for r in M.rows]


def _decision(d: Decision) -> dict:
    c = d.certificate
    if isinstance(c, NotApplicable):
        return {"verdict": "not_applicable", "reason": c.reason}
    out = {"verdict": bool(d.holds)}
    if isinstance(c, Solution):
        out["lambda"] = _rats(c.lam)
    elif isinstance(c, Violation):
        out["violation"] = {"index": c.index, "lhs": format_rat(c.lhs), "rhs": format_rat(c.rhs)}
    return out


def classification_tree(c: Classification, top: bool = True) -> dict:
    tree = {}
    if top:
        tree["version"] = REPORT_VERSION
    tree.update({
        "name": c.name,
        "n": c.n,
        "l": c.l,
        "m": c.m,
        "blocks": {"G1": _mat(c.blocks.G1), "G2": _mat(c.blocks.G2)},
        "alpha": _rats(c.alpha),
        "trace": format_rat(c.trace),
        "isotropy": {
            "omega_J": c.omega_J_isotropic,
            "omega_K": c.omega_K_isotropic,
            "omega_I": c.omega_I_isotropic,
        },
        "omega_I_obstruction": _mat(c.omega_I_obstruction),
        "hmin_ambient_J": _decision(c.hmin_ambient_J),
        "hmin_ambient_K": _decision(c.hmin_ambient_K),
        "sphere_r_sq": format_rat(c.sphere_r_sq),
        "horizontal_J": c.horizontal_J,
        "horizontal_K": c.horizontal_K,
        "hmin_projected_J": _decision(c.hmin_projected_J),
        "hmin_projected_K": _decision(c.hmin_projected_K),
        "minimal_in_sphere": c.minimal_in_sphere,
        "propagation": {
            "x_minimal": c.propagation.x_minimal,
            "y_minimal": c.propagation.y_minimal,
            "full_minimal": c.propagation.full_minimal,
        },
    })
    for side, sub in (("homogeneous_X", c.homogeneous_X), ("homogeneous_Y", c.homogeneous_Y)):
        if sub is not None:
            tree[side] = classification_tree(sub, top=False)
    if top:
        tree["conventions"] = {
            "projected_minimality": PROJECTED_MINIMALITY_CONVENTION,
            "structures": K_STRUCTURE_CONVENTION,
        }
    return tree


def oracle_tree(reports: Iterable[ResidualReport], params: OracleParams) -> dict:
    tree = {
        "params": {
            "seed": params.rng_seed,
            "samples": params.sample_count,
            "fd_step": params.fd_step,
            "tolerance": params.tolerance,
            "identity_tolerance": params.identity_tolerance,
            "far_threshold": params.far_threshold,
        }
    }
    for r in reports:
        tree[r.check] = {
            "residual": float(f"{r.residual:.6e}"),
            "tolerance": r.tolerance,
            "band": r.band,
            "expect_zero": r.expect_zero,
            "outcome": r.outcome,
            "worst_point": [float(f"{t:.6f}") for t in r.worst_point],
        }
    return tree


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6e}"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def flatten(tree: dict, prefix: str = "") -> list[tuple[str, str]]:
    out = []
    for k, v in tree.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(flatten(v, key + "."))
        else:
            out.append((key, _scalar(v)))
    return out


def render_lines(tree: dict) -> str:
    return "".join(f"{k}: {v}\n" for k, v in flatten(tree))


def render_json(tree: dict) -> str:
    return json.dumps(tree, indent=2) + "\n"
