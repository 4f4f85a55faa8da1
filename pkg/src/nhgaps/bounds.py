"""Machine-checkable verdicts for the gap-comparison and locality inequalities.

Every check returns a BoundReport rather than asserting: the inequalities are
theorems, so a report with satisfied=False on valid input is a build-failing
bug, but the reports themselves are data.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .clifford import CliffordRep
from .errors import InputError
from .gaps import clifford_linear_gap, clifford_radial_gap
from .kernels import departure_from_normality, opnorm
from .localizer import (
    MatrixTuple,
    ProbeSite,
    commutator_sum_norm,
    f_term_norm,
    nh_localizer,
    shifted_herm,
    shifted_nonherm,
)
from .quadratic import quadratic_gaps

__all__ = [
    "BoundReport",
    "check_linear_vs_quadratic",
    "check_linear_vs_radial",
    "check_locality",
    "check_radial_vs_quadratic",
    "probe_locality_scaling",
]

log = logging.getLogger(__name__)

_TOL = 1e-9


def _satisfied(lhs: float, rhs: float) -> bool:
    return lhs <= rhs + _TOL * max(1.0, abs(lhs), abs(rhs))


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality: satisfied iff lhs <= rhs up to 1e-9 * scale."""

    name: str
    lhs: float
    rhs: float
    satisfied: bool
    slack: float
    extras: dict = field(default_factory=dict)


def _report(name: str, lhs: float, rhs: float, **extras) -> BoundReport:
    return BoundReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        satisfied=_satisfied(lhs, rhs),
        slack=rhs - lhs,
        extras=dict(extras),
    )


def _defect_term(t: MatrixTuple, site: ProbeSite) -> float:
    (shifted_b,) = shifted_nonherm(t, site)
    return opnorm(shifted_b - shifted_b.conj().T)


def check_linear_vs_radial(
    t: MatrixTuple, site: ProbeSite, rep: CliffordRep
) -> BoundReport:
    """|linear - radial| <= sqrt(N) ||(B-nu) - (B-nu)^dag|| + departure(L),
    with N the dimension of the localizer and the Schur departure surrogate
    (a valid upper bound for the infimum the inequality is stated with)."""
    loc = nh_localizer(t, site, rep)
    linear = clifford_linear_gap(t, site, rep)
    radial = clifford_radial_gap(t, site, rep)
    dim = loc.shape[0]
    rhs = float(np.sqrt(dim)) * _defect_term(t, site) + departure_from_normality(loc).schur
    return _report("linear_vs_radial", abs(linear - radial), rhs)


def check_radial_vs_quadratic(
    t: MatrixTuple, site: ProbeSite, rep: CliffordRep
) -> BoundReport:
    """|radial - gap_q| <= sqrt(sum ||[A_i, A_k]|| + ||F||)."""
    radial = clifford_radial_gap(t, site, rep)
    _, _, gap_q = quadratic_gaps(t, site)
    rhs = float(np.sqrt(commutator_sum_norm(t) + f_term_norm(t, site, rep)))
    return _report("radial_vs_quadratic", abs(radial - gap_q), rhs)


def check_linear_vs_quadratic(
    t: MatrixTuple, site: ProbeSite, rep: CliffordRep
) -> BoundReport:
    """|linear - gap_q| bounded by the sum of the two right-hand sides above."""
    loc = nh_localizer(t, site, rep)
    linear = clifford_linear_gap(t, site, rep)
    _, _, gap_q = quadratic_gaps(t, site)
    dim = loc.shape[0]
    rhs = (
        float(np.sqrt(dim)) * _defect_term(t, site)
        + departure_from_normality(loc).schur
        + float(np.sqrt(commutator_sum_norm(t) + f_term_norm(t, site, rep)))
    )
    return _report("linear_vs_quadratic", abs(linear - gap_q), rhs)


_COMMUTE_RTOL = 1e-12


def _inverse_sqrt_of_z_squared(t: MatrixTuple, site: ProbeSite) -> tuple[np.ndarray, float]:
    """Z^{-1} with Z^2 = sum (A_i - lambda_i)^2, plus the condition number of Z.

    Requires pairwise-commuting Hermitian entries with every shifted entry
    invertible (the caller shifts the system to arrange this).
    """
    shifted = shifted_herm(t, site)
    scale = max((opnorm(a) for a in t.herm), default=1.0)
    for i in range(t.d1):
        for k in range(i + 1, t.d1):
            comm = t.herm[i] @ t.herm[k] - t.herm[k] @ t.herm[i]
            if opnorm(comm) > _COMMUTE_RTOL * max(1.0, scale**2):
                raise InputError("locality check requires pairwise-commuting Hermitian entries")
    for i, a in enumerate(shifted):
        svals = np.linalg.svd(a, compute_uv=False)
        if svals[-1] <= t.n * np.finfo(float).eps * max(svals[0], 1.0):
            raise InputError(
                f"shifted Hermitian entry {i} is singular at this probe site; "
                "shift the system or move the probe"
            )
    z_sq = sum(a @ a for a in shifted)
    w, v = np.linalg.eigh(z_sq)
    if w[0] <= 0:
        raise InputError("Z^2 is not positive definite at this probe site")
    z_inv = (v / np.sqrt(w)) @ v.conj().T
    cond_z = float(np.sqrt(w[-1] / w[0]))
    return z_inv, cond_z


def _locality_k(t: MatrixTuple, site: ProbeSite, perturbation) -> tuple[float, float]:
    shifted_b = shifted_nonherm(t, site)
    z_inv, cond_z = _inverse_sqrt_of_z_squared(t, site)
    w = np.zeros((t.n, t.n), dtype=np.complex128)
    for b, c in zip(shifted_b, perturbation):
        w += b.conj().T @ c + c.conj().T @ b + c.conj().T @ c
    return opnorm(z_inv @ w @ z_inv), cond_z


def check_locality(t: MatrixTuple, site: ProbeSite, perturbation) -> BoundReport:
    """Sandwich (1-K)^{1/2} gap <= perturbed gap <= (1+K)^{1/2} gap for the
    right and combined quadratic gaps, under K < 1 with

        K = || Z^{-1} ( sum (B_j-nu_j)^dag C_j + C_j^dag (B_j-nu_j)
                        + C_j^dag C_j ) Z^{-1} ||.

    When K >= 1 the hypothesis fails and nothing is asserted; the report
    carries K either way, along with the condition number of Z.  lhs is the
    largest violation of the four inequalities (rhs = 0).
    """
    perturbation = [np.asarray(c, dtype=np.complex128) for c in perturbation]
    if len(perturbation) != t.d2:
        raise InputError(
            f"expected {t.d2} perturbation matrices, got {len(perturbation)}"
        )
    k_value, cond_z = _locality_k(t, site, perturbation)
    if k_value >= 1.0:
        return _report(
            "locality",
            0.0,
            0.0,
            K=k_value,
            cond_z=cond_z,
            hypothesis_met=False,
            note="hypothesis not met (K >= 1); no assertion made",
        )
    perturbed = MatrixTuple(
        t.herm, tuple(b + c for b, c in zip(t.nonherm, perturbation))
    )
    base_rq, _, base_q = quadratic_gaps(t, site)
    pert_rq, _, pert_q = quadratic_gaps(perturbed, site)
    lower = float(np.sqrt(1.0 - k_value))
    upper = float(np.sqrt(1.0 + k_value))
    violations = [
        lower * base_rq - pert_rq,
        pert_rq - upper * base_rq,
        lower * base_q - pert_q,
        pert_q - upper * base_q,
    ]
    return _report(
        "locality",
        max(violations),
        0.0,
        K=k_value,
        cond_z=cond_z,
        hypothesis_met=True,
        gap_rq=base_rq,
        gap_rq_perturbed=pert_rq,
        gap_q=base_q,
        gap_q_perturbed=pert_q,
    )


def probe_locality_scaling(
    t: MatrixTuple, site: ProbeSite, perturbation, scales=(0.25, 0.5, 0.75, 1.0)
) -> list[float]:
    """K as a function of the perturbation scale t*C.

    Monotonicity in the scale is not claimed by the theory; values are logged
    and returned as diagnostics only.
    """
    perturbation = [np.asarray(c, dtype=np.complex128) for c in perturbation]
    ks = []
    for s in scales:
        k_value, _ = _locality_k(t, site, [s * c for c in perturbation])
        ks.append(k_value)
    log.info("locality scaling probe: scales=%s K=%s", list(scales), ks)
    return ks
