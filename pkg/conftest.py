"""Fixtures compartidas por las pruebas."""

import numpy as np
import pytest

from src.algebra.field import Field
from src.algebra.freepoly import FreePoly
from src.utils.settings import Defaults


@pytest.fixture
def fp():
    """F_p con el primo por defecto 2^31 - 1."""
    return Field.prime(Defaults.DEFAULT_PRIME)


@pytest.fixture
def qq():
    return Field.rational()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def xy(fp):
    """Generadores x, y de F_2 sobre el primo por defecto."""
    return FreePoly.generator(fp, 2, 0), FreePoly.generator(fp, 2, 1)
