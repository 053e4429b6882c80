import pytest

import qmu


@pytest.fixture(scope="session")
def warm():
    """Compile the numba kernels once so timed tests measure search, not JIT."""
    qmu.warm_up()
    return qmu.backend_name()


@pytest.fixture
def q3():
    return qmu.hypercube(3)


@pytest.fixture
def k4_minus_edge():
    return qmu.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
