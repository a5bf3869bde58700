import math

import numpy as np
import pytest

from ptqm import PhaseClass, PTParams, classify_phase

GRID_R = (0.0, 0.3, 1.0, 1.7)
GRID_S = (1.0, 2.0)
GRID_PSI = (0.0, math.pi / 6, -math.pi / 6, math.pi / 3, -math.pi / 3)


def unbroken_grid() -> list[PTParams]:
    """The reference parameter grid, restricted to the unbroken phase."""
    pts = []
    for r in GRID_R:
        for s in GRID_S:
            for psi in GRID_PSI:
                p = PTParams(r=r, s=s, psi=psi)
                if classify_phase(p) is PhaseClass.UNBROKEN:
                    pts.append(p)
    return pts


@pytest.fixture(scope="session")
def grid():
    return unbroken_grid()


@pytest.fixture
def rng():
    return np.random.default_rng(987654321)
