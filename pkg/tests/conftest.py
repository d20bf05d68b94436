import pytest

from pauliwht._kernels import warm_up


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # JIT-compile the transform kernels once so timed tests stay honest
    warm_up()
