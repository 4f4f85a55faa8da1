"""Dense spectral primitives: eigenvalues, smallest singular value,
departure from normality, Hermiticity defect.

All functions accept square complex matrices (anything `np.asarray` maps to a
2-d array) and are pure: no caching, no mutation, safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import schur
from scipy.linalg.lapack import get_lapack_funcs

from .errors import InputError

__all__ = [
    "NormalityDeparture",
    "SpectralSummary",
    "as_square_matrix",
    "departure_from_normality",
    "eigenvalues",
    "hermiticity_defect",
    "opnorm",
    "schur_spectral_data",
    "sigma_min",
    "summarize",
]


def as_square_matrix(m) -> np.ndarray:
    """Validate and return `m` as a square complex128 array.

    Raises InputError on non-square shape or non-finite entries.
    """
    a = np.ascontiguousarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a.view(np.float64))):
        raise InputError("matrix contains non-finite entries")
    return a


def opnorm(m) -> float:
    """Operator (spectral) norm: the largest singular value."""
    a = np.asarray(m, dtype=np.complex128)
    if a.size == 0:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def opnorm_hermitian(m) -> float:
    """Operator norm of a Hermitian matrix via its extreme eigenvalues."""
    a = np.asarray(m, dtype=np.complex128)
    if a.size == 0:
        return 0.0
    w = np.linalg.eigvalsh(a)
    return float(max(abs(w[0]), abs(w[-1])))


def eigenvalues(m) -> np.ndarray:
    """Eigenvalues with multiplicity, sorted by real part, ties by imaginary part.

    The ordering is a total order, so repeated calls on the same matrix return
    the identical sequence.
    """
    a = as_square_matrix(m)
    w = np.linalg.eigvals(a)
    order = np.lexsort((w.imag, w.real))
    return w[order]


def sigma_min(m) -> float:
    """Smallest singular value of a square matrix."""
    a = as_square_matrix(m)
    return float(np.linalg.svd(a, compute_uv=False)[-1])


def hermiticity_defect(m) -> float:
    """Operator norm of M - M^dagger; zero exactly when M is Hermitian."""
    a = as_square_matrix(m)
    return opnorm(a - a.conj().T)


class NormalityDeparture(NamedTuple):
    """Two computable surrogates for the departure from normality.

    schur:
        operator norm of the strictly upper-triangular part of one computed
        Schur factorization.  An upper bound on the infimum over all Schur
        orderings, so every inequality stated with the infimum remains valid
        when this value is substituted.
    frobenius:
        sqrt(||M||_F^2 - sum |lambda_i|^2), the ordering-independent Frobenius
        departure.  Reported for diagnostics; always >= the schur value.
    """

    schur: float
    frobenius: float


def _complex_schur_t(a: np.ndarray) -> np.ndarray:
    """Upper-triangular factor of one complex Schur decomposition of `a`.

    Uses LAPACK gees without accumulating the unitary factor; falls back to
    scipy.linalg.schur if the direct call fails.
    """
    (gees,) = get_lapack_funcs(("gees",), (a,))
    result = gees(lambda x: None, a, compute_v=0)
    if result[-1] == 0:
        return result[0]
    t, _ = schur(a, output="complex")
    return t


def departure_from_normality(m) -> NormalityDeparture:
    """Schur and Frobenius departure-from-normality surrogates for `m`.

    Both values are zero (up to roundoff) exactly when `m` is normal.
    """
    a = as_square_matrix(m)
    t = _complex_schur_t(a)
    strict_upper = np.triu(t, 1)
    schur_value = opnorm(strict_upper)
    frob_sq = float(np.linalg.norm(a, "fro") ** 2 - np.sum(np.abs(np.diagonal(t)) ** 2))
    return NormalityDeparture(schur_value, np.sqrt(max(frob_sq, 0.0)))


def schur_spectral_data(m) -> tuple[np.ndarray, NormalityDeparture]:
    """Eigenvalues (sorted as in `eigenvalues`) and normality departure from a
    single Schur factorization.

    Sweep drivers use this to avoid a second dense eigensolve when both the
    spectrum and the departure are needed at one probe site.
    """
    a = as_square_matrix(m)
    t = _complex_schur_t(a)
    w = np.asarray(np.diagonal(t))
    order = np.lexsort((w.imag, w.real))
    strict_upper = np.triu(t, 1)
    schur_value = opnorm(strict_upper)
    frob_sq = float(np.linalg.norm(a, "fro") ** 2 - np.sum(np.abs(w) ** 2))
    return w[order], NormalityDeparture(schur_value, np.sqrt(max(frob_sq, 0.0)))


@dataclass(frozen=True)
class SpectralSummary:
    """Sorted spectrum plus the scalar minima other modules consume.

    Invariants: sigma_min <= min_abs_spec and min_abs_real_spec <= min_abs_spec,
    with all three nonnegative.
    """

    eigenvalues: np.ndarray
    sigma_min: float
    min_abs_spec: float
    min_abs_real_spec: float


def summarize(m) -> SpectralSummary:
    """Bundle eigenvalues, sigma_min, min |spec| and min |Re spec| for `m`."""
    a = as_square_matrix(m)
    w = eigenvalues(a)
    return SpectralSummary(
        eigenvalues=w,
        sigma_min=sigma_min(a),
        min_abs_spec=float(np.min(np.abs(w))),
        min_abs_real_spec=float(np.min(np.abs(w.real))),
    )
