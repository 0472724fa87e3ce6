"""Shared fixtures: the small presets are built once per session."""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pytest

from qhopf import presets
from qhopf.groups import cyclic_product


@pytest.fixture(scope="session")
def z2():
    return cyclic_product([2])


@pytest.fixture(scope="session")
def z2cubed():
    return cyclic_product([2, 2, 2])


@pytest.fixture(scope="session")
def dz2():
    """D^φ(Z2) with φ(1,1,1) = -1."""
    return presets.double("z2").algebra


@pytest.fixture(scope="session")
def kz2():
    """k_φ(Z2) with r(1,1) = i."""
    return presets.kphi("z2")
