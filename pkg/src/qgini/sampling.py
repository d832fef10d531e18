"""Seeded random states and the seed-splitting rule used for restarts.

All sampling goes through :class:`numpy.random.Generator`, so a fixed seed
reproduces the exact same states on every platform numpy supports.
"""

import numpy as np

from qgini.qsystem import DensityMatrix, StateVector, check_dimension

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def split_seed(master: int, index: int) -> int:
    """Derive an independent 64-bit child seed from a master seed and an index.

    splitmix64: the child is the splitmix64 finalizer applied to
    master + (index + 1) * golden-ratio constant, all mod 2**64. Children for
    distinct indices are decorrelated even when master seeds are tiny.
    """
    z = (int(master) + (int(index) + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _as_generator(rng) -> np.random.Generator:
    # accepts a Generator unchanged, or any valid seed material
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_state_vector(d: int, rng) -> StateVector:
    """Draw a Haar-distributed pure state: complex standard normal, normalized."""
    check_dimension(d)
    gen = _as_generator(rng)
    parts = gen.standard_normal((2, d))
    return StateVector.normalized(parts[0] + 1j * parts[1])


def random_density_matrix(d: int, rng, components: int | None = None) -> DensityMatrix:
    """Draw a random mixed state as a convex combination of pure projectors.

    The number of components defaults to a uniform draw from 1..d; weights
    come from the flat Dirichlet distribution on the simplex. components=1
    gives a pure state in density form.
    """
    check_dimension(d)
    gen = _as_generator(rng)
    k = int(gen.integers(1, d + 1)) if components is None else int(components)
    if k < 1:
        raise ValueError(f"need at least one component, got {components!r}")
    weights = gen.dirichlet(np.ones(k))
    entries = np.zeros((d, d), dtype=np.complex128)
    for w in weights:
        amp = random_state_vector(d, gen).amplitudes
        entries += w * np.outer(amp, amp.conj())
    return DensityMatrix(entries)
