"""Kernel backend selection: compiled extension if available, numpy fallback.

Set FWLAB_PURE_PYTHON=1 to force the fallback (used by the benchmark and
for debugging).
"""

import os

if os.environ.get("FWLAB_PURE_PYTHON"):
    from fwlab.kernels._fallback import CyclicTridiagonal, godunov_step

    BACKEND = "python"
else:
    try:
        from fwlab.kernels._core import CyclicTridiagonal, godunov_step

        BACKEND = "compiled"
    except ImportError:  # extension not built
        from fwlab.kernels._fallback import CyclicTridiagonal, godunov_step

        BACKEND = "python"

__all__ = ["CyclicTridiagonal", "godunov_step", "BACKEND"]
