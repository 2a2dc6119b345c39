import functools

import pytest

from origami_h2.cli import seed_surface
from origami_h2.enumeration import enumerate_primitive
from origami_h2.sl2_orbit import orbit


@pytest.fixture(scope="session")
def enum_keys():
    """Memoised enumerate_primitive — several suites sweep the same ranges."""
    return functools.lru_cache(maxsize=None)(enumerate_primitive)


@pytest.fixture(scope="session")
def named_orbit():
    """Memoised orbit computation for the named families A/B/C."""

    @functools.lru_cache(maxsize=None)
    def compute(label: str, n: int):
        return orbit(seed_surface(label, n))

    return compute
