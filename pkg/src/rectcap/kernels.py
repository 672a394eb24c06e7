"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is.  Set ``RECTCAP_PURE_PYTHON=1`` to force
the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("RECTCAP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

rc = _impl.rc
hist_words = _impl.hist_words
hist_catalan = _impl.hist_catalan
hist_perms = _impl.hist_perms

__all__ = ["BACKEND", "rc", "hist_words", "hist_catalan", "hist_perms"]
