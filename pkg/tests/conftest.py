import numpy as np
import pytest

from fwlab.godunov import GodunovConfig, run
from fwlab.grid import initial_data, make_grid
from fwlab.waves import continue_branch


@pytest.fixture(scope="session")
def grid1000():
    return make_grid(1000)


@pytest.fixture(scope="session")
def data1_traj(grid1000):
    """data1 run to t=0.65 with 0.01 snapshot cadence (shock tracking)."""
    u0 = initial_data("data1", grid1000)
    cfg = GodunovConfig(
        grid=grid1000,
        q=2.0,
        t_end=0.65,
        output_times=list(np.arange(0.0, 0.6501, 0.01)),
    )
    return run(u0, cfg)


@pytest.fixture(scope="session")
def data1_traj_dense(grid1000):
    """data1 run with snapshot spacing 0.002 <= 10 tau (entropy checker)."""
    u0 = initial_data("data1", grid1000)
    cfg = GodunovConfig(
        grid=grid1000,
        q=2.0,
        t_end=0.65,
        output_times=list(np.arange(0.0, 0.6501, 0.002)),
    )
    return run(u0, cfg)


@pytest.fixture(scope="session")
def wave_0255(grid1000):
    """Traveling-wave profile at c = 0.0255 via a short continuation."""
    return continue_branch(0.0250, 0.0255, 5, grid1000)[-1]
