import numpy as np
import pytest

from nhgaps import (
    InputError,
    MatrixTuple,
    ProbeSite,
    build_rep,
    build_tls,
    commutator_sum_norm,
    f_term,
    f_term_norm,
    hermitian_localizer,
    hermiticity_defect,
    nh_localizer,
    opnorm,
    sigma_min,
    TwoLevelParams,
)
from nhgaps.localizer import shifted_herm, shifted_nonherm

from conftest import complex_normal, random_site, random_tuple

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)


class TestMatrixTuple:
    def test_rejects_non_hermitian_entry(self, rng):
        with pytest.raises(InputError):
            MatrixTuple((complex_normal(rng, (3, 3)),), ())

    def test_rejects_mixed_dimensions(self, rng):
        with pytest.raises(InputError):
            MatrixTuple((np.eye(2),), (np.eye(3, dtype=complex),))

    def test_rejects_nonfinite(self):
        bad = np.array([[np.inf, 0], [0, 1]], dtype=complex)
        with pytest.raises(InputError):
            MatrixTuple((np.eye(2),), (bad,))

    def test_arrays_are_frozen(self):
        t = build_tls(TwoLevelParams())
        with pytest.raises(ValueError):
            t.herm[0][0, 0] = 5.0

    def test_probe_site_validation(self):
        with pytest.raises(InputError):
            ProbeSite((np.nan,), ())


class TestHermitianLocalizer:
    def test_single_term_block_structure(self):
        """One position operator at lambda=0 gives [[0, X], [X, 0]]."""
        x = np.diag([-1.0, 1.0]).astype(complex)
        t = MatrixTuple((x,), ())
        loc = hermitian_localizer(t, ProbeSite((0.0,), ()), build_rep(1))
        expected = np.kron(SX, x)
        assert np.array_equal(loc, expected)

    def test_output_is_hermitian(self, rng):
        t = random_tuple(rng, 4, d1=2, d2=0)
        site = ProbeSite(tuple(rng.standard_normal(2)), ())
        loc = hermitian_localizer(t, site, build_rep(2))
        assert hermiticity_defect(loc) == pytest.approx(0.0, abs=1e-12)

    def test_joint_eigenvalue_makes_it_singular(self):
        """Commuting diagonal matrices probed at a joint eigenvalue."""
        a1 = np.diag([1.0, 2.0, 3.0]).astype(complex)
        a2 = np.diag([5.0, 6.0, 7.0]).astype(complex)
        t = MatrixTuple((a1, a2), ())
        loc = hermitian_localizer(t, ProbeSite((2.0, 6.0), ()), build_rep(2))
        assert sigma_min(loc) < 1e-12

    def test_dimension_mismatch(self, rng):
        t = random_tuple(rng, 3, d1=3, d2=0)
        with pytest.raises(InputError):
            hermitian_localizer(t, ProbeSite((0.0, 0.0, 0.0), ()), build_rep(2))


class TestNhLocalizer:
    def test_hermitian_input_gives_hermitian_localizer(self, rng):
        herm = random_tuple(rng, 3, d1=1, d2=0).herm
        b = random_tuple(rng, 3, d1=1, d2=0).herm[0]
        t = MatrixTuple(herm, (b,))
        loc = nh_localizer(t, ProbeSite((0.3,), (0.5 + 0j,)), build_rep(1))
        assert hermiticity_defect(loc) == pytest.approx(0.0, abs=1e-12)

    def test_two_level_block_layout(self):
        """At probe (0, i): [[H - i, X], [X, -(H - i)^dag]]."""
        t = build_tls(TwoLevelParams())
        loc = nh_localizer(t, ProbeSite((0.0,), (1j,)), build_rep(1))
        x = np.diag([-1.0, 1.0])
        h_shift = t.nonherm[0] - 1j * np.eye(2)
        expected = np.block([[h_shift, x], [x, -h_shift.conj().T]])
        assert np.max(np.abs(loc - expected)) == 0.0

    def test_defect_equality(self, rng):
        """||L - L^dag|| equals ||(B - nu) - (B - nu)^dag|| exactly in norm."""
        for d1 in (1, 2):
            t = random_tuple(rng, 3, d1=d1)
            site = random_site(rng, d1)
            loc = nh_localizer(t, site, build_rep(d1))
            (sb,) = shifted_nonherm(t, site)
            lhs = opnorm(loc - loc.conj().T)
            rhs = opnorm(sb - sb.conj().T)
            assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_rejects_multiple_nonhermitian(self, rng):
        t = random_tuple(rng, 3, d1=1, d2=2)
        with pytest.raises(InputError):
            nh_localizer(t, random_site(rng, 1, 2), build_rep(1))

    def test_shift_covariance(self, rng):
        """Shifting probe and matrices together leaves the localizer unchanged."""
        t = random_tuple(rng, 3, d1=2)
        site = random_site(rng, 2)
        dlam = rng.standard_normal(2)
        dnu = complex(rng.standard_normal(), rng.standard_normal())
        eye = np.eye(3)
        shifted = MatrixTuple(
            tuple(a - dl * eye for a, dl in zip(t.herm, dlam)),
            (t.nonherm[0] - dnu * eye,),
        )
        site2 = ProbeSite(
            tuple(np.asarray(site.lam) + dlam), (site.nu[0] + dnu,)
        )
        rep = build_rep(2)
        l1 = nh_localizer(t, site2, rep)
        l2 = nh_localizer(shifted, site, rep)
        assert np.max(np.abs(l1 - l2)) < 1e-12

    def test_normality_commutator_bound(self, rng):
        """||L^dag L - L L^dag|| <= 2 ||L|| (defect(B) + 2 |Im nu|)."""
        for _ in range(20):
            t = random_tuple(rng, 3, d1=1)
            site = random_site(rng, 1)
            loc = nh_localizer(t, site, build_rep(1))
            lhs = opnorm(loc.conj().T @ loc - loc @ loc.conj().T)
            rhs = 2 * opnorm(loc) * (
                hermiticity_defect(t.nonherm[0]) + 2 * abs(site.nu[0].imag)
            )
            assert lhs <= rhs + 1e-9


class TestCommutatorsAndFTerm:
    def test_commuting_diagonal_tuple(self):
        t = MatrixTuple((np.diag([1.0, 2.0]), np.diag([3.0, 4.0])), ())
        assert commutator_sum_norm(t) == 0.0

    def test_pauli_pair(self):
        """||[sigma_x, sigma_y]|| = ||2i sigma_z|| = 2."""
        t = MatrixTuple((SX, SY), ())
        assert commutator_sum_norm(t) == pytest.approx(2.0, abs=1e-12)

    def test_single_matrix_empty_sum(self, rng):
        assert commutator_sum_norm(random_tuple(rng, 3, d1=1, d2=0)) == 0.0

    def test_f_vanishes_for_diagonal_data(self):
        a = np.diag([1.0, 2.0]).astype(complex)
        b = np.diag([3.0 + 1j, 4.0]).astype(complex)
        t = MatrixTuple((a,), (b,))
        site = ProbeSite((1.0,), (3.0 + 1j,))
        assert f_term_norm(t, site, build_rep(1)) == pytest.approx(0.0, abs=1e-14)

    def test_f_is_hermitian(self, rng):
        t = random_tuple(rng, 4, d1=2)
        site = random_site(rng, 2)
        f = f_term(t, site, build_rep(2))
        assert hermiticity_defect(f) == pytest.approx(0.0, abs=1e-12)

    def test_product_expansion_identity(self, rng):
        """L^dag L minus its block-diagonal quadratic part equals the
        commutator sum plus F, entrywise to 1e-10."""
        for d1 in (1, 2, 3):
            t = random_tuple(rng, 4, d1=d1)
            site = random_site(rng, d1)
            rep = build_rep(d1)
            loc = nh_localizer(t, site, rep)
            sa = shifted_herm(t, site)
            (sb,) = shifted_nonherm(t, site)
            m = rep.m
            eye = np.eye(2 * m)
            quad = sum(np.kron(eye, a @ a) for a in sa)
            quad = quad + np.kron(rep.diag_plus, sb.conj().T @ sb)
            quad = quad + np.kron(-rep.diag_minus, sb @ sb.conj().T)
            comm = sum(
                np.kron(rep.gammas[i] @ rep.gammas[j], sa[i] @ sa[j] - sa[j] @ sa[i])
                for i in range(d1)
                for j in range(i + 1, d1)
            )
            residue = loc.conj().T @ loc - quad - comm - f_term(t, site, rep)
            assert np.max(np.abs(residue)) < 1e-10

    def test_triangle_inequality_consistency(self, rng):
        """||L^dag L - quadratic part|| <= commutator sum + ||F||."""
        t = random_tuple(rng, 4, d1=2)
        site = random_site(rng, 2)
        rep = build_rep(2)
        loc = nh_localizer(t, site, rep)
        sa = shifted_herm(t, site)
        (sb,) = shifted_nonherm(t, site)
        eye = np.eye(2 * rep.m)
        quad = sum(np.kron(eye, a @ a) for a in sa)
        quad = quad + np.kron(rep.diag_plus, sb.conj().T @ sb)
        quad = quad + np.kron(-rep.diag_minus, sb @ sb.conj().T)
        lhs = opnorm(loc.conj().T @ loc - quad)
        assert lhs <= commutator_sum_norm(t) + f_term_norm(t, site, rep) + 1e-9
