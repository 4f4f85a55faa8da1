import numpy as np
import pytest

from nhgaps import InputError
from nhgaps.kernels import (
    departure_from_normality,
    eigenvalues,
    hermiticity_defect,
    opnorm,
    schur_spectral_data,
    sigma_min,
    summarize,
)

from conftest import complex_normal, random_hermitian

SZ = np.diag([1.0, -1.0]).astype(complex)
EP_MATRIX = np.array([[2j, 1], [1, 0]], dtype=complex)  # defective: both eigenvalues i
JORDAN = np.array([[0, 1], [0, 0]], dtype=complex)


class TestEigenvalues:
    def test_diagonal(self):
        w = eigenvalues(np.diag([1.0, 2j]))
        assert w == pytest.approx([2j, 1.0])  # sorted by real part

    def test_defective_double_eigenvalue(self):
        """The coalescence point has a doubly degenerate eigenvalue i."""
        w = eigenvalues(EP_MATRIX)
        assert np.allclose(w, [1j, 1j], atol=1e-7)

    def test_trace_identity(self, rng):
        """Eigenvalue sum equals the trace to 1e-10."""
        m = complex_normal(rng, (6, 6))
        assert abs(eigenvalues(m).sum() - np.trace(m)) < 1e-10

    def test_ordering_is_reproducible(self, rng):
        m = complex_normal(rng, (7, 7))
        w1, w2 = eigenvalues(m), eigenvalues(m)
        assert np.array_equal(w1, w2)

    def test_sorted_by_real_then_imag(self, rng):
        w = eigenvalues(complex_normal(rng, (8, 8)))
        key = sorted(range(len(w)), key=lambda i: (w[i].real, w[i].imag))
        assert key == list(range(len(w)))

    def test_nonfinite_rejected(self):
        with pytest.raises(InputError):
            eigenvalues(np.array([[np.nan, 0], [0, 1]]))

    def test_nonsquare_rejected(self):
        with pytest.raises(InputError):
            eigenvalues(np.ones((2, 3)))


class TestSigmaMin:
    def test_identity(self):
        for n in (1, 3, 6):
            assert sigma_min(np.eye(n)) == pytest.approx(1.0)

    def test_singular_at_coalescence(self):
        """H - iI is singular at the coalescence point (determinant zero)."""
        assert sigma_min(EP_MATRIX - 1j * np.eye(2)) < 1e-12

    def test_gram_oracle(self, rng):
        """Agrees with sqrt of the smallest eigenvalue of M^dag M to 1e-8."""
        m = complex_normal(rng, (8, 8))
        gram = np.sqrt(max(np.linalg.eigvalsh(m.conj().T @ m)[0], 0.0))
        assert sigma_min(m) == pytest.approx(gram, abs=1e-8)

    def test_unitary_invariance(self, rng):
        m = complex_normal(rng, (6, 6))
        q, _ = np.linalg.qr(complex_normal(rng, (6, 6)))
        assert sigma_min(q @ m @ q.conj().T) == pytest.approx(sigma_min(m), abs=1e-10)

    def test_at_most_min_abs_eigenvalue(self, rng):
        """sigma_min never exceeds min |spec|, strictly below on a Jordan block."""
        for _ in range(25):
            m = complex_normal(rng, (5, 5))
            assert sigma_min(m) <= np.abs(eigenvalues(m)).min() + 1e-12
        assert sigma_min(JORDAN) < np.abs(eigenvalues(JORDAN)).min() + 1  # 0 < 1


class TestDepartureFromNormality:
    def test_hermitian_is_normal(self, rng):
        dep = departure_from_normality(random_hermitian(rng, 5))
        assert dep.schur == pytest.approx(0.0, abs=1e-12)
        assert dep.frobenius == pytest.approx(0.0, abs=1e-6)

    def test_jordan_block(self):
        dep = departure_from_normality(JORDAN)
        assert dep.schur == pytest.approx(1.0, abs=1e-14)
        assert dep.frobenius == pytest.approx(1.0, abs=1e-14)

    def test_schur_below_frobenius(self, rng):
        """The spectral norm of the strict upper part never exceeds its
        Frobenius norm, and both are nonnegative."""
        for _ in range(20):
            dep = departure_from_normality(complex_normal(rng, (6, 6)))
            assert 0.0 <= dep.schur <= dep.frobenius + 1e-12

    def test_frobenius_size_scaled_commutator_bound(self, rng):
        """dep_F^2 <= sqrt((n^3 - n)/12) ||M M^dag - M^dag M||_F (Henrici)."""
        for _ in range(20):
            n = 6
            m = complex_normal(rng, (n, n))
            dep = departure_from_normality(m)
            comm = m @ m.conj().T - m.conj().T @ m
            bound = np.sqrt((n**3 - n) / 12.0) * np.linalg.norm(comm, "fro")
            assert dep.frobenius**2 <= bound + 1e-9

    def test_bounds_spectrum_vs_sigma_min(self, rng):
        """|sigma_min - min |spec|| <= schur departure (asserted with the Schur
        surrogate only)."""
        for _ in range(50):
            m = complex_normal(rng, (5, 5))
            gap = abs(sigma_min(m) - np.abs(eigenvalues(m)).min())
            assert gap <= departure_from_normality(m).schur + 1e-9


class TestHermiticityDefect:
    def test_pauli_z(self):
        assert hermiticity_defect(SZ) == 0.0

    def test_ep_matrix(self):
        """Twice the skew part of the (1,1) entry: ||diag(4i, 0)|| = 4."""
        assert hermiticity_defect(EP_MATRIX) == pytest.approx(4.0, abs=1e-14)

    def test_shifted_hermitian(self, rng):
        """For Hermitian M, the defect of M - nu is exactly 2 |Im nu|."""
        m = random_hermitian(rng, 5)
        nu = 0.7 - 1.3j
        defect = hermiticity_defect(m - nu * np.eye(5))
        assert defect == pytest.approx(2 * abs(nu.imag), abs=1e-12)


class TestSummaryAndSchurData:
    def test_summary_invariants(self, rng):
        for _ in range(20):
            s = summarize(complex_normal(rng, (5, 5)))
            assert 0.0 <= s.sigma_min <= s.min_abs_spec + 1e-12
            assert 0.0 <= s.min_abs_real_spec <= s.min_abs_spec + 1e-12

    def test_schur_data_matches_separate_calls(self, rng):
        m = complex_normal(rng, (6, 6))
        w, dep = schur_spectral_data(m)
        assert np.allclose(np.sort(w.real), np.sort(eigenvalues(m).real), atol=1e-10)
        assert dep.schur == pytest.approx(departure_from_normality(m).schur, abs=1e-12)

    def test_opnorm_matches_svd(self, rng):
        m = complex_normal(rng, (5, 5))
        assert opnorm(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[0])
