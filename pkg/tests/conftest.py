import pytest

from omband import LatticeParams


@pytest.fixture
def hopping_dominated() -> LatticeParams:
    """Default parameter set: J, K > g (wide bands, narrow crossings)."""
    return LatticeParams()


@pytest.fixture
def coupling_dominated() -> LatticeParams:
    """Flat-band set: g > J + K, so hybridization is strong everywhere."""
    return LatticeParams(omega_m=4.3, Delta=-4.3, J=0.043, K=0.0013, g=0.086)
