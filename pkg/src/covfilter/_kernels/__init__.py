"""Hot numerical kernels with backend selection at import time.

The compiled Cython backend is preferred; the pure-NumPy fallback is used
when the extension is missing or when COVFILTER_PURE_PYTHON is set.  Both
expose the same three functions and agree to float rounding.
"""

import os

from . import _pure

if os.environ.get("COVFILTER_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from . import _cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = "cython" if _impl is not _pure else "pure"

garch11_filter = _impl.garch11_filter
garch11_neg_loglike = _impl.garch11_neg_loglike
dcc_pair_neg_loglike = _impl.dcc_pair_neg_loglike

__all__ = [
    "BACKEND",
    "garch11_filter",
    "garch11_neg_loglike",
    "dcc_pair_neg_loglike",
]
