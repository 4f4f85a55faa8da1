"""Matrix tuples, probe sites, and spectral localizer assembly.

Tensor-ordering convention, fixed once for the whole package: the Clifford
factor is the outer (coarse block) index and the physical matrix is the inner
index, i.e. terms are assembled as kron(Gamma, A - lambda).  With the
representations from `clifford.build_rep` this makes the localizer for one
position operator literally

    [[B - nu,            A - lambda],
     [A - lambda, -(B - nu)^dagger]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import CliffordRep
from .errors import InputError
from .kernels import opnorm, opnorm_hermitian

__all__ = [
    "MatrixTuple",
    "ProbeSite",
    "commutator_sum_norm",
    "f_term",
    "f_term_norm",
    "hermitian_localizer",
    "nh_localizer",
]

_HERM_RTOL = 1e-12


def _validated(a, what: str) -> np.ndarray:
    m = np.ascontiguousarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"{what} must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise InputError(f"{what} contains non-finite entries")
    if m.flags.writeable:
        m = m.copy()
        m.setflags(write=False)
    return m


@dataclass(frozen=True)
class MatrixTuple:
    """A system (A, B): d1 Hermitian and d2 general complex n x n matrices.

    In physical use the Hermitian entries are scaled position operators
    (any kappa scaling is applied by the caller) and the non-Hermitian entry
    is the Hamiltonian.  Arrays are copied and frozen on construction.
    """

    herm: tuple[np.ndarray, ...]
    nonherm: tuple[np.ndarray, ...] = ()

    def __post_init__(self):
        herm = tuple(_validated(a, f"herm[{i}]") for i, a in enumerate(self.herm))
        nonherm = tuple(_validated(b, f"nonherm[{j}]") for j, b in enumerate(self.nonherm))
        if not herm and not nonherm:
            raise InputError("matrix tuple must contain at least one matrix")
        dims = {a.shape[0] for a in herm} | {b.shape[0] for b in nonherm}
        if len(dims) != 1:
            raise InputError(f"all matrices must share one dimension, got {sorted(dims)}")
        for i, a in enumerate(herm):
            defect = opnorm(a - a.conj().T)
            if defect > _HERM_RTOL * opnorm(a):
                raise InputError(
                    f"herm[{i}] is not Hermitian (defect {defect:.3e} exceeds "
                    f"{_HERM_RTOL:.0e} * norm)"
                )
        object.__setattr__(self, "herm", herm)
        object.__setattr__(self, "nonherm", nonherm)

    @property
    def n(self) -> int:
        return (self.herm or self.nonherm)[0].shape[0]

    @property
    def d1(self) -> int:
        return len(self.herm)

    @property
    def d2(self) -> int:
        return len(self.nonherm)

    def adjoint_nonherm(self) -> "MatrixTuple":
        """Same Hermitian entries, each non-Hermitian entry replaced by its adjoint."""
        return MatrixTuple(self.herm, tuple(b.conj().T for b in self.nonherm))


@dataclass(frozen=True)
class ProbeSite:
    """Trial joint spectrum point: real lambda per Hermitian matrix, complex nu
    per non-Hermitian one."""

    lam: tuple[float, ...]
    nu: tuple[complex, ...] = ()

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lam)
        nu = tuple(complex(z) for z in self.nu)
        if not all(np.isfinite(x) for x in lam):
            raise InputError("probe site lambda contains non-finite entries")
        if not all(np.isfinite(z.real) and np.isfinite(z.imag) for z in nu):
            raise InputError("probe site nu contains non-finite entries")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "nu", nu)

    def conjugate_nu(self) -> "ProbeSite":
        return ProbeSite(self.lam, tuple(z.conjugate() for z in self.nu))


def _check_site(t: MatrixTuple, site: ProbeSite) -> None:
    if len(site.lam) != t.d1 or len(site.nu) != t.d2:
        raise InputError(
            f"probe site shape ({len(site.lam)}, {len(site.nu)}) does not match "
            f"tuple shape ({t.d1}, {t.d2})"
        )


def shifted_herm(t: MatrixTuple, site: ProbeSite) -> list[np.ndarray]:
    """The matrices A_i - lambda_i."""
    _check_site(t, site)
    eye = np.eye(t.n, dtype=np.complex128)
    return [a - lam * eye for a, lam in zip(t.herm, site.lam)]


def shifted_nonherm(t: MatrixTuple, site: ProbeSite) -> list[np.ndarray]:
    """The matrices B_j - nu_j."""
    _check_site(t, site)
    eye = np.eye(t.n, dtype=np.complex128)
    return [b - nu * eye for b, nu in zip(t.nonherm, site.nu)]


def hermitian_localizer(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> np.ndarray:
    """Hermitian spectral localizer sum_i kron(Gamma_i, A_i - lambda_i).

    Requires d2 = 0 and a representation with at least d1 generators.
    """
    if t.d2 != 0:
        raise InputError("hermitian localizer requires a tuple with no non-Hermitian part")
    if rep.d < t.d1:
        raise InputError(f"representation has {rep.d} generators, need at least {t.d1}")
    shifted = shifted_herm(t, site)
    size = rep.block_dim * t.n
    out = np.zeros((size, size), dtype=np.complex128)
    for gamma, a in zip(rep.gammas, shifted):
        out += np.kron(gamma, a)
    return out


def nh_localizer(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> np.ndarray:
    """Non-Hermitian spectral localizer for d1 Hermitian matrices and one
    general matrix B:

        sum_i kron(Gamma_i, A_i - lambda_i)
        + kron(diag(I_m, 0),  B - nu)
        + kron(diag(0, -I_m), (B - nu)^dagger)
    """
    if t.d2 != 1:
        raise InputError(
            f"the localizer admits exactly one non-Hermitian matrix, got d2={t.d2}"
        )
    if rep.d != t.d1:
        raise InputError(f"representation built for d={rep.d}, tuple has d1={t.d1}")
    shifted_a = shifted_herm(t, site)
    (shifted_b,) = shifted_nonherm(t, site)
    size = rep.block_dim * t.n
    out = np.zeros((size, size), dtype=np.complex128)
    for gamma, a in zip(rep.gammas, shifted_a):
        out += np.kron(gamma, a)
    out += np.kron(rep.diag_plus, shifted_b)
    out += np.kron(rep.diag_minus, shifted_b.conj().T)
    return out


def commutator_sum_norm(t: MatrixTuple) -> float:
    """sum over i < k of the operator norm of [A_i, A_k]; zero for d1 <= 1."""
    total = 0.0
    for i in range(t.d1):
        for k in range(i + 1, t.d1):
            total += opnorm(t.herm[i] @ t.herm[k] - t.herm[k] @ t.herm[i])
    return total


def f_term(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> np.ndarray:
    """The Hermitian cross term F appearing in L^dagger L:

        F = sum_i kron(Gamma_i diag(I_m, 0),  (A_i - lambda_i)(B - nu))        + h.c.
          + sum_i kron(Gamma_i diag(0, -I_m), (A_i - lambda_i)(B - nu)^dagger) + h.c.
    """
    if t.d2 != 1:
        raise InputError(f"the F term requires d2=1, got d2={t.d2}")
    if rep.d != t.d1:
        raise InputError(f"representation built for d={rep.d}, tuple has d1={t.d1}")
    shifted_a = shifted_herm(t, site)
    (shifted_b,) = shifted_nonherm(t, site)
    shifted_b_dag = shifted_b.conj().T
    size = rep.block_dim * t.n
    s = np.zeros((size, size), dtype=np.complex128)
    for gamma, a in zip(rep.gammas, shifted_a):
        s += np.kron(gamma @ rep.diag_plus, a @ shifted_b)
        s += np.kron(gamma @ rep.diag_minus, a @ shifted_b_dag)
    return s + s.conj().T


def f_term_norm(t: MatrixTuple, site: ProbeSite, rep: CliffordRep) -> float:
    """Operator norm of the F cross term (F is Hermitian by construction)."""
    return opnorm_hermitian(f_term(t, site, rep))
