"""Clifford representations used by the spectral localizer.

`build_rep(d)` returns `d` pairwise-anticommuting Hermitian involutions
("gammas") together with the diagonal split blocks diag(I_m, 0) and
diag(0, -I_m) whose sum is one further anticommuting generator.  All entries
are Gaussian integers (0, +-1, +-i), exactly representable in complex128, so
`verify_rep` checks every relation with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = ["CliffordRep", "build_rep", "verify_rep"]

_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

_MAX_GENERATORS = 11  # practical cap; beyond this the blocks exceed 64x64


@dataclass(frozen=True)
class CliffordRep:
    """d anticommuting Hermitian involutions of size 2m plus the split blocks.

    diag_plus is diag(I_m, 0_m) and diag_minus is diag(0_m, -I_m); their sum
    diag(I_m, -I_m) anticommutes with every gamma.
    """

    d: int
    m: int
    gammas: tuple[np.ndarray, ...]
    diag_plus: np.ndarray
    diag_minus: np.ndarray

    @property
    def block_dim(self) -> int:
        """Side length 2m of each generator."""
        return 2 * self.m


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


def _odd_rep(k: int) -> list[np.ndarray]:
    """Canonical k-element representation for odd k >= 3.

    Base {sigma_x, sigma_y, sigma_z}; each step maps {g_i} of size m to
    {sigma_x (x) g_i} + {sigma_y (x) I_m, sigma_z (x) I_m}, doubling the size.
    The Pauli factor is placed on the coarse (outer) index so the final
    generator is literally diag(I_m, -I_m).
    """
    if k == 3:
        return [_SIGMA_X, _SIGMA_Y, _SIGMA_Z]
    prev = _odd_rep(k - 2)
    eye = np.eye(prev[0].shape[0], dtype=np.complex128)
    out = [np.kron(_SIGMA_X, g) for g in prev]
    out.append(np.kron(_SIGMA_Y, eye))
    out.append(np.kron(_SIGMA_Z, eye))
    return out


def build_rep(d: int) -> CliffordRep:
    """Representation with d gammas plus the diagonal split, sized 2m with
    m = 2^floor((d-1)/2).

    For even d the generators are the first d elements of the (d+1)-element
    odd representation; for odd d they are the first d elements of the
    (d+2)-element one (the sigma_y-structured element is dropped).  In both
    cases the final sigma_z-structured element diag(I_m, -I_m) is returned
    split into diag_plus and diag_minus.
    """
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise InputError(f"number of generators must be a positive integer, got {d!r}")
    if d > _MAX_GENERATORS:
        raise InputError(f"d={d} exceeds the practical cap of {_MAX_GENERATORS}")
    elements = _odd_rep(d + 1 if d % 2 == 0 else d + 2)
    gammas = tuple(_frozen(g) for g in elements[:d])
    split = elements[-1]
    m = split.shape[0] // 2
    diag_plus = np.zeros_like(split)
    diag_plus[:m, :m] = np.eye(m)
    diag_minus = np.zeros_like(split)
    diag_minus[m:, m:] = -np.eye(m)
    return CliffordRep(
        d=int(d),
        m=m,
        gammas=gammas,
        diag_plus=_frozen(diag_plus),
        diag_minus=_frozen(diag_minus),
    )


_ALLOWED_ENTRIES = np.array([0, 1, -1, 1j, -1j], dtype=np.complex128)


def _entries_allowed(a: np.ndarray) -> bool:
    return bool(np.all(np.isin(a.ravel(), _ALLOWED_ENTRIES)))


def verify_rep(rep: CliffordRep) -> list[str]:
    """Check every representation relation exactly; return the violations.

    An empty list means the representation is valid.  Violations are data,
    not errors: hand-built invalid representations are reported, not raised.
    """
    violations: list[str] = []
    size = 2 * rep.m
    eye = np.eye(size, dtype=np.complex128)

    expected_plus = np.zeros((size, size), dtype=np.complex128)
    expected_plus[: rep.m, : rep.m] = np.eye(rep.m)
    expected_minus = np.zeros((size, size), dtype=np.complex128)
    expected_minus[rep.m :, rep.m :] = -np.eye(rep.m)
    if not np.array_equal(rep.diag_plus, expected_plus):
        violations.append("diag_plus is not diag(I_m, 0_m)")
    if not np.array_equal(rep.diag_minus, expected_minus):
        violations.append("diag_minus is not diag(0_m, -I_m)")

    split = rep.diag_plus + rep.diag_minus
    for i, g in enumerate(rep.gammas):
        if g.shape != (size, size):
            violations.append(f"gamma[{i}] has shape {g.shape}, expected {(size, size)}")
            continue
        if not _entries_allowed(g):
            violations.append(f"gamma[{i}] has entries outside {{0, +-1, +-i}}")
        if not np.array_equal(g, g.conj().T):
            violations.append(f"gamma[{i}] is not Hermitian")
        if not np.array_equal(g @ g, eye):
            violations.append(f"gamma[{i}] squared is not the identity")
        if np.any(g @ split + split @ g):
            violations.append(f"gamma[{i}] does not anticommute with the diagonal split")
    for i in range(len(rep.gammas)):
        for k in range(i + 1, len(rep.gammas)):
            gi, gk = rep.gammas[i], rep.gammas[k]
            if gi.shape != (size, size) or gk.shape != (size, size):
                continue
            if np.any(gi @ gk + gk @ gi):
                violations.append(f"gamma[{i}] and gamma[{k}] do not anticommute")
    return violations
