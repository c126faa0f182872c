"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module.  Set ``EULERPROD_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("EULERPROD_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
stepped_product = _impl.stepped_product
stepped_log_sum = _impl.stepped_log_sum
ratio_product = _impl.ratio_product
alternating_ratio_product = _impl.alternating_ratio_product
de_beta_level = _impl.de_beta_level
