"""Exact decision procedures for isotropy, H-minimality, horizontality and minimality.

Every H-minimality test reduces to one overdetermined rational system
``(lam, v_d) = t_d`` for d = 1..n, where ``v_d`` are the rows of E (form J)
or F (form K) and ``t_d`` a target built from alpha.  A solvable system
comes back with its solution ``lam``; an unsolvable one with the first row
that breaks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

from .ratmath import RatMat, dot, rank, solve, vec
from .torus import (
    MetricBlocks,
    TorusSpec,
    alpha,
    alpha_parts,
    check_valid,
    metric_blocks,
    project_homogeneous,
)

FORMS = ("J", "K")


@dataclass(frozen=True)
class Solution:
    lam: tuple


@dataclass(frozen=True)
class Violation:
    """Row ``index`` (1-based) is the first one no solution of the rows above can satisfy.

    Those rows already pin ``(lam, v_index)`` to ``lhs``; the row asks for ``rhs``.
    """
    index: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class NotApplicable:
    reason: str


Certificate = Union[Solution, Violation, NotApplicable]


class Decision(NamedTuple):
    holds: Optional[bool]  # None when not applicable
    certificate: Certificate


def decide_system(A: RatMat, targets: Sequence) -> Decision:
    """Solve ``A lam = targets`` exactly, or locate the first inconsistent row."""
    targets = vec(targets)
    lam = solve(A, targets)
    if lam is not None:
        return Decision(True, Solution(lam))
    for d in range(1, A.nrows + 1):
        prefix = RatMat(A.rows[:d], A.ncols)
        if solve(prefix, targets[:d]) is None:
            before = solve(RatMat(A.rows[:d - 1], A.ncols), targets[:d - 1])
            return Decision(False, Violation(d, dot(before, A.row(d - 1)), targets[d - 1]))
    raise AssertionError("unreachable: full system inconsistent but every prefix solvable")


def _frequencies(spec: TorusSpec, form: str) -> RatMat:
    form = form.upper()
    if form == "J":
        return spec.E
    if form == "K":
        return spec.F
    raise ValueError(f"form must be 'J' or 'K', got {form!r}")


# -- criteria ---------------------------------------------------------------

def omega_I_obstruction(spec: TorusSpec) -> RatMat:
    """``C[p][q] = sum_d r_d^2 e_dp f_dq``: the value of omega_I on (d_x_p psi, d_y_q psi) at x = 0."""
    rows = [[sum((w * spec.E[d, p] * spec.F[d, q] for d, w in enumerate(spec.r_sq)), Fraction(0))
             for q in range(spec.m)] for p in range(spec.l)]
    return RatMat(tuple(tuple(r) for r in rows), spec.m)


def omega_I_isotropic(spec: TorusSpec) -> bool:
    """Exact test that omega_I vanishes on the whole torus.

    omega_I(d_x_p psi, d_y_q psi) = sum_d r_d^2 e_dp f_dq cos 2(e_d, x) and the
    x-x and y-y pairs vanish identically.  The cosines of distinct frequency
    classes {e, -e} are linearly independent, so the form vanishes iff every
    nonzero class has sum_d +-r_d^2 f_d = 0 (sign chosen so that +-e_d = e).
    The matrix C above is the x = 0 value; C = 0 is necessary, not sufficient.
    """
    classes: dict[tuple, list[Fraction]] = {}
    for d, w in enumerate(spec.r_sq):
        e = spec.E.row(d)
        lead = next((c for c in e if c != 0), None)
        if lead is None:
            continue
        sign = 1 if lead > 0 else -1
        key = tuple(sign * c for c in e)
        acc = classes.setdefault(key, [Fraction(0)] * spec.m)
        for q in range(spec.m):
            acc[q] += sign * w * spec.F[d, q]
    return all(c == 0 for acc in classes.values() for c in acc)


def ambient_targets(spec: TorusSpec, a: Sequence | None = None) -> tuple:
    a = alpha(spec) if a is None else a
    return tuple(x / spec.dim for x in a)


def hmin_ambient(spec: TorusSpec, form: str, a: Sequence | None = None) -> Decision:
    """H-minimality in H^n: is ``(lam, v_d) = alpha_d / (l+m)`` solvable?"""
    return decide_system(_frequencies(spec, form), ambient_targets(spec, a))


def hmin_ambient_by_rank(spec: TorusSpec, form: str, a: Sequence | None = None) -> bool:
    """Same question as :func:`hmin_ambient`, asked as ``rank [v_d ; alpha_d] == dim``."""
    A = _frequencies(spec, form)
    a = alpha(spec) if a is None else a
    return rank(A.hstack(a)) == A.ncols


def sphere_radius_sq(spec: TorusSpec) -> Fraction:
    return sum(spec.r_sq, Fraction(0))


def horizontal_sum(spec: TorusSpec, form: str) -> tuple:
    A = _frequencies(spec, form)
    return tuple(sum((w * A[d, p] for d, w in enumerate(spec.r_sq)), Fraction(0))
                 for p in range(A.ncols))


def horizontality(spec: TorusSpec, form: str) -> bool:
    """``sum_d r_d^2 e_d == 0`` (J) or ``sum_d r_d^2 f_d == 0`` (K)."""
    return all(s == 0 for s in horizontal_sum(spec, form))


def projected_targets(spec: TorusSpec, a: Sequence | None = None) -> tuple:
    a = alpha(spec) if a is None else a
    return tuple(x - spec.dim for x in a)


def hmin_projected(spec: TorusSpec, form: str, a: Sequence | None = None) -> Decision:
    """H-minimality of the Hopf projection: ``(lam, v_d) = alpha_d - (l+m)``.

    Only defined for tori in the unit sphere that are horizontal for ``form``.
    """
    r2 = sphere_radius_sq(spec)
    if r2 != 1:
        return Decision(None, NotApplicable(f"not in the unit sphere (sum r^2 = {r2})"))
    if not horizontality(spec, form):
        return Decision(None, NotApplicable(f"not pi_{form.upper()}-horizontal"))
    return decide_system(_frequencies(spec, form), projected_targets(spec, a))


def hmin_projected_by_rank(spec: TorusSpec, form: str) -> bool:
    A = _frequencies(spec, form)
    return rank(A.hstack(projected_targets(spec))) == A.ncols


def minimal_in_sphere(spec: TorusSpec, a: Sequence | None = None) -> bool:
    """``alpha_d == (l+m) / r^2`` for every d, r^2 = sum r_d^2."""
    a = alpha(spec) if a is None else a
    target = Fraction(spec.dim) / sphere_radius_sq(spec)
    return all(x == target for x in a)


@dataclass(frozen=True)
class PropagationReport:
    x_minimal: Optional[bool]  # None when the factor is 0-dimensional
    y_minimal: Optional[bool]
    full_minimal: bool

    @property
    def implication_holds(self) -> bool:
        premise = self.x_minimal is not False and self.y_minimal is not False
        return self.full_minimal or not premise


def minimality_propagation_check(spec: TorusSpec) -> PropagationReport:
    """Minimality of both homogeneous factors must force minimality of the whole torus."""
    blocks = metric_blocks(spec)
    ae, af = alpha_parts(spec, blocks)
    r2 = sphere_radius_sq(spec)
    x_min = all(a == Fraction(spec.l) / r2 for a in ae) if spec.l else None
    y_min = all(a == Fraction(spec.m) / r2 for a in af) if spec.m else None
    report = PropagationReport(x_min, y_min, minimal_in_sphere(spec, [a + b for a, b in zip(ae, af)]))
    if not report.implication_holds:
        raise AssertionError(f"minimal factors but non-minimal torus: {spec}")
    return report


# -- aggregation ------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    name: str
    n: int
    l: int
    m: int
    blocks: MetricBlocks
    alpha: tuple
    trace: Fraction  # sum_d r_d^2 alpha_d, always l + m
    omega_I_obstruction: RatMat
    omega_I_isotropic: bool
    hmin_ambient_J: Decision
    hmin_ambient_K: Decision
    sphere_r_sq: Fraction
    horizontal_J: bool
    horizontal_K: bool
    hmin_projected_J: Decision
    hmin_projected_K: Decision
    minimal_in_sphere: bool
    propagation: PropagationReport
    homogeneous_X: Optional["Classification"] = None
    homogeneous_Y: Optional["Classification"] = None

    # Every T^{l,m} is omega_J- and omega_K-isotropic by construction; see torus.FORM_SIDE.
    omega_J_isotropic: bool = True
    omega_K_isotropic: bool = True


def classify(spec: TorusSpec, recurse: bool = True) -> Classification:
    check_valid(spec)
    blocks = metric_blocks(spec)
    a = alpha(spec, blocks)
    decisions = {}
    for form in FORMS:
        amb = hmin_ambient(spec, form, a)
        if amb.holds != hmin_ambient_by_rank(spec, form, a):
            raise AssertionError(f"solve/rank disagreement for form {form} on {spec.name or spec}")
        proj = hmin_projected(spec, form, a)
        if proj.holds is not None and proj.holds != hmin_projected_by_rank(spec, form):
            raise AssertionError(f"projected solve/rank disagreement for form {form}")
        decisions[form] = (amb, proj)
    homogeneous_X = homogeneous_Y = None
    if recurse:
        if spec.l:
            homogeneous_X = classify(project_homogeneous(spec, "X"), recurse=False)
        if spec.m:
            homogeneous_Y = classify(project_homogeneous(spec, "Y"), recurse=False)
    return Classification(
        name=spec.name,
        n=spec.n,
        l=spec.l,
        m=spec.m,
        blocks=blocks,
        alpha=a,
        trace=sum((w * x for w, x in zip(spec.r_sq, a)), Fraction(0)),
        omega_I_obstruction=omega_I_obstruction(spec),
        omega_I_isotropic=omega_I_isotropic(spec),
        hmin_ambient_J=decisions["J"][0],
        hmin_ambient_K=decisions["K"][0],
        sphere_r_sq=sphere_radius_sq(spec),
        horizontal_J=horizontality(spec, "J"),
        horizontal_K=horizontality(spec, "K"),
        hmin_projected_J=decisions["J"][1],
        hmin_projected_K=decisions["K"][1],
        minimal_in_sphere=minimal_in_sphere(spec, a),
        propagation=minimality_propagation_check(spec),
        homogeneous_X=homogeneous_X,
        homogeneous_Y=homogeneous_Y,
    )
