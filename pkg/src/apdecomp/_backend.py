"""Pick the compiled kernels when available, else the numpy fallback.

``APDECOMP_BACKEND=python`` forces the fallback; ``=compiled`` makes a
missing extension an import error instead of a silent downgrade.
"""

import os

_choice = os.environ.get("APDECOMP_BACKEND", "").strip().lower()

if _choice == "python":
    from . import _pycore as core
else:
    try:
        from . import _core as core
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _pycore as core

NAME = core.NAME
order_table = core.order_table
direct_product = core.direct_product
ap_search = core.ap_search

__all__ = ["NAME", "core", "order_table", "direct_product", "ap_search"]
