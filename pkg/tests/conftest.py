import numpy as np
import pytest

from nhgaps import MatrixTuple, ProbeSite


def complex_normal(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_hermitian(rng, n):
    g = complex_normal(rng, (n, n))
    return (g + g.conj().T) / 2


def random_tuple(rng, n, d1, d2=1) -> MatrixTuple:
    herm = tuple(random_hermitian(rng, n) for _ in range(d1))
    nonherm = tuple(complex_normal(rng, (n, n)) for _ in range(d2))
    return MatrixTuple(herm, nonherm)


def random_site(rng, d1, d2=1) -> ProbeSite:
    return ProbeSite(
        tuple(rng.standard_normal(d1)),
        tuple(complex(rng.standard_normal(), rng.standard_normal()) for _ in range(d2)),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
