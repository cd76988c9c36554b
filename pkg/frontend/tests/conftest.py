import subprocess

import pytest


def _fwlab(*args):
    proc = subprocess.run(
        ["fwlab", *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr + proc.stdout
    return proc


@pytest.fixture(scope="session")
def run_dir(tmp_path_factory):
    """A completed primary run directory (small, fast variants of each
    scenario), produced through the public CLI only."""
    root = tmp_path_factory.mktemp("primary-runs")
    _fwlab("simulate", "--out", str(root / "data1"), "--data", "data1",
           "--n", "300", "--t-end", "0.3", "--cadence", "0.05")
    _fwlab("simulate", "--out", str(root / "data2"), "--data", "data2",
           "--n", "300", "--t-end", "0.5", "--cadence", "0.1",
           "--threshold", "0.03")
    _fwlab("wave-branch", "--out", str(root / "branch"), "--n", "300",
           "--c-start", "0.0250", "--c-stop", "0.0265", "--steps", "4",
           "--no-find-endpoint")
    _fwlab("wave-evolve", "--out", str(root / "wave"), "--n", "300",
           "--c", "0.0255", "--t-end", "2", "--cadence", "1")
    return root
