import pytest
from hypothesis import HealthCheck, settings, strategies as st

from thetachain.representations import DimensionSequence
from thetachain.simple import from_sequence

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def dimension_sequences(draw, max_length: int = 13):
    """Random walks from 0 back to 0 with steps of ±1."""
    dims = [0]
    while True:
        remaining = max_length - len(dims)
        if dims[-1] == 0 and (remaining < 2 or draw(st.integers(0, 3)) == 0):
            return DimensionSequence(tuple(dims))
        if dims[-1] == 0 or (dims[-1] < remaining - 1 and draw(st.booleans())):
            dims.append(dims[-1] + 1)
        else:
            dims.append(dims[-1] - 1)


@pytest.fixture(params=["std", "swapped"])
def convention(request):
    return request.param


@pytest.fixture
def arrow(convention):
    return from_sequence((0, 1, 0), convention)
