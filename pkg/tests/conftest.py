import matplotlib

matplotlib.use("Agg")

import numpy as np
import pytest

from hurwitz_composition.composition.generators import classical
from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.system import HurwitzSystem


@pytest.fixture
def complex_system() -> HurwitzSystem:
    """The [2, 2, 2] system of complex multiplication."""
    return classical(2)


@pytest.fixture
def broken_system() -> HurwitzSystem:
    """``{1_2, 1_2}``: norms hold, the anticommutation equation does not."""
    unit = IntMatrix(np.eye(2, dtype=np.int64))
    return HurwitzSystem.from_matrices([unit, unit])
