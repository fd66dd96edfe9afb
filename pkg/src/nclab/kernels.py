"""Backend selection for the hot kernels.

The compiled module is used when it was built; set ``NCLAB_PURE_PYTHON=1`` to
force the numpy fallback. ``BACKEND`` names the active one.
"""

import os

from . import _kernels_py

if os.environ.get("NCLAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"
OVERFLOW_X = _kernels_py.OVERFLOW_X

amplitude = _impl.amplitude
g2_curve = _impl.g2_curve
g2_point = _impl.g2_point
qm_curve = _impl.qm_curve
qm_point = _impl.qm_point
p_grid = _impl.p_grid
