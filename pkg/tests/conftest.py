import numpy as np
import pytest

from rotosense.spin_core import DensityMatrix, PureState, SpinLabel


def random_pure(spin: SpinLabel, rng) -> PureState:
    amp = rng.normal(size=spin.dimension) + 1j * rng.normal(size=spin.dimension)
    return PureState.from_unnormalized(spin, amp)


def random_density(spin: SpinLabel, rng, rank=None) -> DensityMatrix:
    d = spin.dimension
    rank = d if rank is None else rank
    x = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    m = x @ x.conj().T
    return DensityMatrix(spin, m / np.trace(m).real)


def random_axis(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
