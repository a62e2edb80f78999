"""
Shared fixtures for the twistcheck tests
"""
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import liealg
from src.models.context import Case, TwistContext
from src.verify.grids import get_grid


@pytest.fixture
def g_context():
    """T = d1 with E = g_(1,1), order 3"""
    return TwistContext(case=Case.G, n=(1, 1), order=3)


@pytest.fixture
def e_context():
    """The e-case with n = (0,1), x = (0,1), which gives r = m2"""
    return TwistContext(case=Case.E, n=(0, 1), x=(0, 1), order=2)


@pytest.fixture(params=[case.value for case in Case])
def any_context(request):
    return TwistContext(case=request.param, n=(1, 1), order=2)


@pytest.fixture
def quick_grid():
    return get_grid("quick", order=2)


@pytest.fixture
def mutated_exponent():
    """
    Shift the q-exponent of [g_k, e_m] by one for the duration of a test.

    Everything memoized on top of the bracket table is dropped on entry
    and on exit.
    """
    original = liealg.STRUCTURE_EXPONENTS["g,e"]
    liealg.STRUCTURE_EXPONENTS["g,e"] = lambda k, m: original(k, m) + 1
    liealg.clear_caches()
    yield
    liealg.STRUCTURE_EXPONENTS["g,e"] = original
    liealg.clear_caches()
