import pytest

from pfminor import SkewMatrix, ZZ


@pytest.fixture
def generic3():
    """3x3 skew matrix with distinct prime entries above the diagonal."""
    return SkewMatrix(3, ZZ, {(1, 2): 2, (1, 3): 3, (2, 3): 7})


@pytest.fixture
def prime4():
    """4x4 skew matrix with the first six primes above the diagonal."""
    return SkewMatrix(
        4, ZZ, {(1, 2): 2, (1, 3): 3, (1, 4): 5, (2, 3): 7, (2, 4): 11, (3, 4): 13}
    )
