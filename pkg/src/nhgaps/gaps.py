"""Clifford linear and radial gaps, approximate joint-eigenvector extraction
with residual certificates, and reverse pseudospectrum membership."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .clifford import CliffordRep, build_rep
from .errors import InputError
from .kernels import eigenvalues, sigma_min
from .localizer import (
    MatrixTuple,
    ProbeSite,
    commutator_sum_norm,
    f_term_norm,
    nh_localizer,
)
from .quadratic import GapRecord, quadratic_gaps

__all__ = [
    "ResidualCertificate",
    "clifford_linear_gap",
    "clifford_radial_gap",
    "extract_approx_eigvec",
    "gap_record",
    "probe_linear_gap_continuity",
    "reverse_membership_eps",
    "single_matrix_pseudospectrum_eps",
]

log = logging.getLogger(__name__)


def clifford_linear_gap(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> float:
    """min |Re(spec L)| of the non-Hermitian spectral localizer.

    Detects line gaps; for Hermitian B and real nu it coincides with the
    radial gap.
    """
    w = eigenvalues(nh_localizer(t, site, rep))
    return float(np.min(np.abs(w.real)))


def clifford_radial_gap(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> float:
    """sigma_min of the non-Hermitian spectral localizer; detects point gaps."""
    return sigma_min(nh_localizer(t, site, rep))


@dataclass(frozen=True)
class ResidualCertificate:
    """A unit state plus the per-operator eigen-residuals it achieves.

    residuals holds ||A_i psi - lambda_i psi|| for every Hermitian entry
    followed by ||B psi - nu psi|| (side "right") or
    ||B^dagger psi - nu* psi|| (side "left").  The certified guarantee is
    sqrt(sum residuals^2) <= bound with bound = sqrt(2m) sqrt(eps1^2 + eps2),
    eps1 the radial gap and eps2 the commutator-plus-F norm.
    """

    psi: np.ndarray
    side: str
    residuals: tuple[float, ...]
    bound: float
    block_index: int


def _canonical_phase(v: np.ndarray) -> np.ndarray:
    """Rotate a vector so its first non-negligible component is real positive."""
    mags = np.abs(v)
    mx = mags.max()
    if mx == 0.0:
        return v
    idx = int(np.argmax(mags > 1e-12 * mx))
    phase = v[idx] / abs(v[idx])
    return v * phase.conjugate()


def extract_approx_eigvec(
    t: MatrixTuple, site: ProbeSite, rep: CliffordRep
) -> ResidualCertificate:
    """Approximate joint eigenvector from the localizer's bottom singular pair.

    The right singular vector for sigma_min splits into 2m blocks of length n;
    the max-norm block (lowest index on ties) is normalized into the state.
    Blocks 1..m certify a right eigenvector of B, blocks m+1..2m a left one.
    """
    loc = nh_localizer(t, site, rep)
    _, s, vh = np.linalg.svd(loc)
    radial = float(s[-1])
    big = _canonical_phase(vh[-1].conj())

    n = t.n
    blocks = big.reshape(rep.block_dim, n)
    norms = np.linalg.norm(blocks, axis=1)
    k = int(np.argmax(norms))  # argmax returns the lowest index on ties
    psi = _canonical_phase(blocks[k] / norms[k])
    side = "right" if k < rep.m else "left"

    residuals = [
        float(np.linalg.norm(a @ psi - lam * psi)) for a, lam in zip(t.herm, site.lam)
    ]
    (b,) = t.nonherm
    (nu,) = site.nu
    if side == "right":
        residuals.append(float(np.linalg.norm(b @ psi - nu * psi)))
    else:
        residuals.append(float(np.linalg.norm(b.conj().T @ psi - np.conj(nu) * psi)))

    eps2 = commutator_sum_norm(t) + f_term_norm(t, site, rep)
    bound = float(np.sqrt(2 * rep.m) * np.sqrt(radial**2 + eps2))
    return ResidualCertificate(
        psi=psi,
        side=side,
        residuals=tuple(residuals),
        bound=bound,
        block_index=k,
    )


def reverse_membership_eps(
    t: MatrixTuple, site: ProbeSite, psi, side: str = "right"
) -> float:
    """Epsilon for which the residuals of a unit state certify the probe site
    in the radial epsilon-pseudospectrum.

    side "right" uses eps = sqrt(eps1 + eps2) with
    eps1 = sum ||A_i psi - lambda_i psi||^2 + ||B psi - nu psi||^2;
    side "left" replaces B, nu by B^dagger, nu*; side "both" uses the combined
    form eps = sqrt(eps1 / sqrt(2) + eps2) with eps1 doubling the Hermitian
    residuals and including both B-residuals.  eps2 is always the commutator
    sum plus the F-term norm.  The radial gap never exceeds the returned value.
    """
    if t.d2 != 1:
        raise InputError(f"reverse membership requires d2=1, got d2={t.d2}")
    v = np.asarray(psi, dtype=np.complex128).ravel()
    if v.size != t.n:
        raise InputError(f"psi has length {v.size}, expected {t.n}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-12:
        raise InputError(f"psi must be a unit vector, got norm {norm!r}")
    if side not in ("right", "left", "both"):
        raise InputError(f"side must be 'right', 'left' or 'both', got {side!r}")

    herm_sq = sum(
        float(np.linalg.norm(a @ v - lam * v)) ** 2 for a, lam in zip(t.herm, site.lam)
    )
    (b,) = t.nonherm
    (nu,) = site.nu
    right_sq = float(np.linalg.norm(b @ v - nu * v)) ** 2
    left_sq = float(np.linalg.norm(b.conj().T @ v - np.conj(nu) * v)) ** 2

    eps2 = commutator_sum_norm(t) + f_term_norm(t, site, build_rep(t.d1))
    if side == "right":
        eps = float(np.sqrt(herm_sq + right_sq + eps2))
    elif side == "left":
        eps = float(np.sqrt(herm_sq + left_sq + eps2))
    else:
        eps1 = 2.0 * herm_sq + right_sq + left_sq
        eps = float(np.sqrt(eps1 / np.sqrt(2.0) + eps2))

    radial = clifford_radial_gap(t, site, build_rep(t.d1))
    if radial > eps + 1e-9 * max(1.0, eps):
        raise AssertionError(
            f"radial gap {radial!r} exceeds certified epsilon {eps!r}; "
            "this contradicts a proven inequality and indicates a bug"
        )
    return eps


def single_matrix_pseudospectrum_eps(a, z: complex) -> float:
    """sigma_min(A - z I); z lies in the epsilon-pseudospectrum of A exactly
    when this value is strictly below epsilon."""
    m = np.asarray(a, dtype=np.complex128)
    return sigma_min(m - complex(z) * np.eye(m.shape[0], dtype=np.complex128))


def gap_record(
    t: MatrixTuple, site: ProbeSite, rep: CliffordRep | None = None
) -> GapRecord:
    """All five gap values at one probe site (rep defaults to build_rep(d1))."""
    if rep is None:
        rep = build_rep(t.d1)
    gap_rq, gap_lq, gap_q = quadratic_gaps(t, site)
    return GapRecord(
        site=site,
        gap_linear=clifford_linear_gap(t, site, rep),
        gap_radial=clifford_radial_gap(t, site, rep),
        gap_rq=gap_rq,
        gap_lq=gap_lq,
        gap_q=gap_q,
    )


def probe_linear_gap_continuity(
    t: MatrixTuple,
    rep: CliffordRep,
    site_a: ProbeSite,
    site_b: ProbeSite,
    steps: int = 50,
) -> float:
    """Observed modulus of continuity of the linear gap along a probe segment.

    Whether the linear gap is continuous is an open question, so the result is
    logged and returned for inspection, never asserted.
    """
    if steps < 2:
        raise InputError("need at least two steps")
    lam_a, lam_b = np.asarray(site_a.lam), np.asarray(site_b.lam)
    nu_a, nu_b = np.asarray(site_a.nu), np.asarray(site_b.nu)
    ts = np.linspace(0.0, 1.0, steps)
    values = []
    for s in ts:
        site = ProbeSite(tuple((1 - s) * lam_a + s * lam_b), tuple((1 - s) * nu_a + s * nu_b))
        values.append(clifford_linear_gap(t, site, rep))
    values = np.asarray(values)
    seg_len = float(np.linalg.norm(lam_b - lam_a) + np.linalg.norm(nu_b - nu_a))
    dt = seg_len / (steps - 1) if seg_len > 0 else 1.0
    modulus = float(np.max(np.abs(np.diff(values))) / dt) if steps > 1 else 0.0
    log.info(
        "linear-gap continuity probe: %d steps, observed difference quotient %.6e",
        steps,
        modulus,
    )
    return modulus
