"""Pick the kernel implementation at import time.

The compiled extension is used when it was built; setting FPM_PURE_PYTHON=1
forces the pure-Python kernels.
"""

import os

from . import _pykernels

if os.environ.get("FPM_PURE_PYTHON") == "1":
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = kernels.NAME


def available():
    """Return every importable kernel module, pure Python first."""
    mods = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        mods.append(_ckernels)
    return mods
