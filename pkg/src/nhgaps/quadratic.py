"""Right/left/combined quadratic composite operators and their gap functions.

The right quadratic operator RQ = sum (A_i - lambda_i)^2
+ sum (B_j - nu_j)^dagger (B_j - nu_j) is Hermitian positive semidefinite;
LQ swaps the factor order.  The combined operator is their direct sum, so its
gap is the minimum of the two.  Unlike the localizer, any number d2 >= 0 of
non-Hermitian matrices is supported here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .localizer import MatrixTuple, ProbeSite, shifted_herm, shifted_nonherm
from .kernels import opnorm

__all__ = [
    "GapRecord",
    "QuadraticOperators",
    "build_quadratic",
    "expectation_variance",
    "quadratic_epsilon_membership",
    "quadratic_gaps",
    "rm_stack",
    "site_distance",
    "tuple_distance",
]

# above this dimension the stacked-SVD route is skipped in favour of the
# Hermitian eigenpath (conditioning note: the SVD route avoids squaring)
_STACK_SVD_MAX_N = 1024

_PSD_RTOL = 1e-10
_HERM_RTOL = 1e-12


@dataclass(frozen=True)
class QuadraticOperators:
    """The pair (RQ, LQ); the combined operator is implicit as their direct sum."""

    rq: np.ndarray
    lq: np.ndarray


def build_quadratic(t: MatrixTuple, site: ProbeSite) -> QuadraticOperators:
    """Assemble RQ and LQ at a probe site and validate they are Hermitian PSD
    up to roundoff."""
    shifted_a = shifted_herm(t, site)
    shifted_b = shifted_nonherm(t, site)
    n = t.n
    rq = np.zeros((n, n), dtype=np.complex128)
    lq = np.zeros((n, n), dtype=np.complex128)
    for a in shifted_a:
        sq = a @ a
        rq += sq
        lq += sq
    for b in shifted_b:
        rq += b.conj().T @ b
        lq += b @ b.conj().T
    for name, q in (("rq", rq), ("lq", lq)):
        scale = max(opnorm(q), 1.0)
        if opnorm(q - q.conj().T) > _HERM_RTOL * scale:
            raise InputError(f"{name} failed the Hermiticity check")
        if np.linalg.eigvalsh(q)[0] < -_PSD_RTOL * scale:
            raise InputError(f"{name} failed the positive-semidefiniteness check")
    return QuadraticOperators(rq=rq, lq=lq)


def rm_stack(t: MatrixTuple, site: ProbeSite) -> np.ndarray:
    """Vertical stack of all shifted matrices, shape ((d1 + d2) n, n).

    Its smallest singular value equals the right quadratic gap.
    """
    blocks = shifted_herm(t, site) + shifted_nonherm(t, site)
    return np.vstack(blocks)


def _smallest_singular(stack: np.ndarray) -> float:
    return float(np.linalg.svd(stack, compute_uv=False)[-1])


def _gap_from_eigpath(q: np.ndarray) -> float:
    return float(np.sqrt(max(np.linalg.eigvalsh(q)[0], 0.0)))


def quadratic_gaps(t: MatrixTuple, site: ProbeSite) -> tuple[float, float, float]:
    """(gap_rq, gap_lq, gap_q) at one probe site.

    For n <= 1024 the gaps come from the smallest singular value of the
    stacked matrix (better conditioned near zero than squaring); the
    eigendecomposition of RQ/LQ is the independent oracle kept for tests and
    used above that size.  gap_q is exactly min(gap_rq, gap_lq).
    """
    if t.n <= _STACK_SVD_MAX_N:
        gap_rq = _smallest_singular(rm_stack(t, site))
        gap_lq = _smallest_singular(rm_stack(t.adjoint_nonherm(), site.conjugate_nu()))
    else:
        ops = build_quadratic(t, site)
        gap_rq = _gap_from_eigpath(ops.rq)
        gap_lq = _gap_from_eigpath(ops.lq)
    return gap_rq, gap_lq, min(gap_rq, gap_lq)


def expectation_variance(b, psi) -> tuple[complex, float]:
    """Expectation <B psi, psi> and squared variance <B^dag B psi, psi> - |E|^2
    of a matrix in a unit state."""
    m = np.asarray(b, dtype=np.complex128)
    v = np.asarray(psi, dtype=np.complex128).ravel()
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] != v.size:
        raise InputError("matrix and state dimensions do not match")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-12:
        raise InputError(f"psi must be a unit vector, got norm {norm!r}")
    bv = m @ v
    expectation = complex(np.vdot(v, bv))
    variance_sq = float(np.real(np.vdot(bv, bv)) - abs(expectation) ** 2)
    return expectation, variance_sq


def quadratic_epsilon_membership(
    t: MatrixTuple, site: ProbeSite, eps: float
) -> tuple[bool, bool, bool]:
    """Membership flags (in_rq, in_lq, in_q) for the closed epsilon level sets
    gap <= eps."""
    if eps < 0:
        raise InputError(f"eps must be nonnegative, got {eps}")
    gap_rq, gap_lq, gap_q = quadratic_gaps(t, site)
    return gap_rq <= eps, gap_lq <= eps, gap_q <= eps


def tuple_distance(t: MatrixTuple, other: MatrixTuple) -> float:
    """Stacked-column distance between two tuples of identical shape: the
    operator norm of the vertical stack of all entrywise differences."""
    if t.d1 != other.d1 or t.d2 != other.d2 or t.n != other.n:
        raise InputError("tuples must have identical shape")
    blocks = [a - c for a, c in zip(t.herm, other.herm)]
    blocks += [b - d for b, d in zip(t.nonherm, other.nonherm)]
    return opnorm(np.vstack(blocks))


def site_distance(site: ProbeSite, other: ProbeSite) -> float:
    """Euclidean distance between two probe sites of identical shape."""
    if len(site.lam) != len(other.lam) or len(site.nu) != len(other.nu):
        raise InputError("probe sites must have identical shape")
    dl = np.asarray(site.lam) - np.asarray(other.lam)
    dn = np.asarray(site.nu) - np.asarray(other.nu)
    return float(np.sqrt(np.sum(dl**2) + np.sum(np.abs(dn) ** 2)))


@dataclass(frozen=True)
class GapRecord:
    """All five gap values at one probe site; gap_q = min(gap_rq, gap_lq)."""

    site: ProbeSite
    gap_linear: float
    gap_radial: float
    gap_rq: float
    gap_lq: float
    gap_q: float

    def __post_init__(self):
        if self.gap_q != min(self.gap_rq, self.gap_lq):
            raise InputError("gap_q must equal min(gap_rq, gap_lq) exactly")
