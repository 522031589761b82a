"""Shared fixtures: small matrices with known spectra."""

import numpy as np
import pytest

from modules.matrix.matrix import ComplexMatrix


@pytest.fixture
def worked_example():
    """[[2,2,1],[2,2,1],[1,1,1]]: eigenvalues (5 +- sqrt(17))/2 and 0."""
    return ComplexMatrix([[2, 2, 1], [2, 2, 1], [1, 1, 1]])


@pytest.fixture
def hermitian_3():
    return ComplexMatrix([
        [2, 1 - 1j, 0],
        [1 + 1j, 3, 1j],
        [0, -1j, 1],
    ])


@pytest.fixture
def nilpotent_2():
    """[[0,1],[0,0]]: numerical range is the disc of radius 1/2."""
    return ComplexMatrix([[0, 1], [0, 0]])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return ComplexMatrix((g + g.conj().T) / 2)


def random_complex(rng, n):
    return ComplexMatrix(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
