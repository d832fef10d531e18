import numpy as np
import pytest

from qgini import new_system


@pytest.fixture(scope="session")
def sys3():
    return new_system(3)


@pytest.fixture(scope="session")
def sys5():
    return new_system(5)


@pytest.fixture(scope="session")
def sys7():
    return new_system(7)


def reference_fourier(d: int) -> np.ndarray:
    """Independent Fourier construction: explicit exponentials, no table reuse."""
    f = np.empty((d, d), dtype=np.complex128)
    for r in range(d):
        for s in range(d):
            f[r, s] = np.exp(2j * np.pi * r * s / d) / np.sqrt(d)
    return f
