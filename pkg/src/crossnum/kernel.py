"""Planarity kernel selected at import: compiled extension if built, else pure Python.

Set ``CROSSNUM_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("CROSSNUM_PURE_PYTHON"):
    from ._kernel_py import IMPLEMENTATION, kuratowski, kuratowski_packing, planar
else:
    try:
        from ._kernel import IMPLEMENTATION, kuratowski, kuratowski_packing, planar
    except ImportError:
        from ._kernel_py import IMPLEMENTATION, kuratowski, kuratowski_packing, planar

__all__ = ["IMPLEMENTATION", "kuratowski", "kuratowski_packing", "planar"]
