"""The worked examples, with the verdicts they are known to have.

Expected verdicts are keyed by the flattened report paths of
:func:`isotori.report.flatten`.  ``homogeneous_X`` is the torus psi(x, 0),
whose natural structure is J; ``homogeneous_Y`` is psi(0, y), with K.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .torus import TorusSpec


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    spec: TorusSpec
    expected: dict = field(default_factory=dict)


def _spec(name, r_sq, E, F):
    return TorusSpec.build(r_sq, E, F, name=name)


_ENTRIES = [
    CatalogEntry(
        "ex2-1-tnm",
        "T^{3,2} in H^3 with e_d the standard basis (l = n), f_1, f_2 a basis and "
        "f_3 = f_1, r_3 = r_1 != r_2. H-minimal for both J and K.",
        _spec("ex2-1-tnm", ["1", "2", "1"],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
              [["1", "0"], ["0", "1"], ["1", "0"]]),
        {
            "hmin_ambient_J.verdict": "true",
            "hmin_ambient_K.verdict": "true",
            "blocks.G1": "[[1, 0, 0], [0, 2, 0], [0, 0, 1]]",
        },
    ),
    CatalogEntry(
        "ex2-2-t22",
        "T^{2,2} in H^4: radii (2, 1, 1/2, 1). Not H-minimal for J or K, "
        "though both homogeneous tori T^{2,0}, T^{0,2} are H-minimal in C^4.",
        _spec("ex2-2-t22", ["4", "1", "1/4", "1"],
              [["1", "0"], ["0", "1"], ["2", "2"], ["1", "2"]],
              [["1", "0"], ["0", "1"], ["1", "0"], ["0", "1"]]),
        {
            "blocks.G1": "[[6, 3], [3, 6]]",
            "alpha": "[70/153, 13/18, 172/153, 7/6]",
            "hmin_ambient_J.verdict": "false",
            "hmin_ambient_K.verdict": "false",
            "homogeneous_X.hmin_ambient_J.verdict": "true",
            "homogeneous_Y.hmin_ambient_K.verdict": "true",
        },
    ),
    CatalogEntry(
        "ex2-3-t33",
        "T^{3,3} in H^4: H-minimal for J and K simultaneously, while the "
        "homogeneous tori T^{3,0}, T^{0,3} are not H-minimal in C^4.",
        _spec("ex2-3-t33", ["1", "1", "1", "1/2"],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["2", "0", "0"]],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["0", "2", "0"]]),
        {
            "alpha": "[4/3, 4/3, 2, 8/3]",
            "hmin_ambient_J.verdict": "true",
            "hmin_ambient_J.lambda": "[2/9, 2/9, 1/3]",
            "hmin_ambient_K.verdict": "true",
            "horizontal_J": "false",
            "homogeneous_X.hmin_ambient_J.verdict": "false",
            "homogeneous_Y.hmin_ambient_K.verdict": "false",
        },
    ),
    CatalogEntry(
        "ex3-1-t33-minimal",
        "T^{3,3} in H^4 with radii (1, sqrt(3/2), sqrt(3/2), 1): minimal in the "
        "sphere of radius sqrt(5); the homogeneous tori are not minimal there.",
        _spec("ex3-1-t33-minimal", ["1", "3/2", "3/2", "1"],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["-1", "-1", "-1"]],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["-1", "0", "0"]]),
        {
            "alpha": "[6/5, 6/5, 6/5, 6/5]",
            "sphere_r_sq": "5",
            "minimal_in_sphere": "true",
            "homogeneous_X.minimal_in_sphere": "false",
            "homogeneous_Y.minimal_in_sphere": "false",
        },
    ),
    CatalogEntry(
        "ex3-2-t22-projected",
        "T^{2,2} in the unit sphere of H^4, pi_J- and pi_K-horizontal. Its "
        "projections to CP^7 are H-minimal, but not minimal; pi(T^{2,0}) is "
        "minimal and pi(T^{0,2}) is H-minimal, but not minimal in CP^3.",
        _spec("ex3-2-t22-projected", ["1/4", "1/4", "1/4", "1/4"],
              [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]],
              [["1", "0"], ["0", "1"], ["-2", "-1"], ["1", "0"]]),
        {
            "alpha": "[3, 5, 5, 3]",
            "sphere_r_sq": "1",
            "horizontal_J": "true",
            "horizontal_K": "true",
            "hmin_projected_J.verdict": "true",
            "hmin_projected_J.lambda": "[-1, 1]",
            "hmin_projected_K.verdict": "true",
            "hmin_projected_K.lambda": "[-1, 1]",
            "minimal_in_sphere": "false",
            "omega_I_obstruction": "[[3/4, 1/4], [-1/4, 1/4]]",
            "homogeneous_X.minimal_in_sphere": "true",
            "homogeneous_Y.hmin_projected_K.verdict": "true",
            "homogeneous_Y.minimal_in_sphere": "false",
        },
    ),
    CatalogEntry(
        "ex3-3-t23-minimal",
        "T^{2,3} in the unit sphere of H^4: both homogeneous tori are minimal, "
        "so the torus is minimal and its projections to CP^7 are minimal. "
        "(For T^{1,1} the projections are known to be minimal in CP^3; that "
        "case is not certified here.)",
        _spec("ex3-3-t23-minimal", ["1/4", "1/4", "1/4", "1/4"],
              [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]],
              [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["-1", "-1", "-1"]]),
        {
            "alpha": "[5, 5, 5, 5]",
            "sphere_r_sq": "1",
            "minimal_in_sphere": "true",
            "hmin_projected_J.verdict": "true",
            "hmin_projected_K.verdict": "true",
            "propagation.x_minimal": "true",
            "propagation.y_minimal": "true",
            "propagation.full_minimal": "true",
            "homogeneous_X.minimal_in_sphere": "true",
            "homogeneous_Y.minimal_in_sphere": "true",
        },
    ),
    CatalogEntry(
        "corollary-tnn",
        "T^{2,2} in H^2 with e_d = f_d the standard basis: l = m = n, so "
        "H-minimal for J and K simultaneously.",
        _spec("corollary-tnn", ["1", "2"],
              [["1", "0"], ["0", "1"]],
              [["1", "0"], ["0", "1"]]),
        {
            "hmin_ambient_J.verdict": "true",
            "hmin_ambient_K.verdict": "true",
        },
    ),
    CatalogEntry(
        "unit-circle",
        "The unit circle x -> e^{jx} in H^1: a great circle, minimal in the unit sphere.",
        _spec("unit-circle", ["1"], [["1"]], [[]]),
        {
            "alpha": "[1]",
            "sphere_r_sq": "1",
            "hmin_ambient_J.verdict": "true",
            "hmin_ambient_J.lambda": "[1]",
            "minimal_in_sphere": "true",
        },
    ),
]

CATALOG = {e.name: e for e in _ENTRIES}


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None
