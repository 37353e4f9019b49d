import numpy as np
import pytest

from qufti import permanent_naive, warm_up


@pytest.fixture(scope="session", autouse=True)
def _warm_engines():
    # JIT-compile the fast permanent and populate the permutation cache up
    # front, so timed tests measure the algorithms rather than compilation.
    warm_up()
    permanent_naive(np.eye(3, dtype=complex))
