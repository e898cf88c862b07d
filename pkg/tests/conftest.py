import random

import pytest

from qwspectra.kernels import BACKENDS


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    """Each modular-kernel implementation available in this build."""
    return BACKENDS[request.param]


@pytest.fixture
def rng():
    return random.Random(20240917)
