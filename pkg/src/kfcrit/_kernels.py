"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pure`` module. Setting ``KFCRIT_PURE=1`` forces the
fallback.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("KFCRIT_PURE", "") not in ("", "0"):
    backend = _pure
else:
    try:
        from . import _core as backend
    except ImportError:
        backend = _pure

BACKEND = backend.BACKEND
WORD_LIMIT = 64


def for_graph(n: int):
    """Backend able to handle an ``n``-vertex graph; bitset words cap the compiled one."""
    return backend if n <= WORD_LIMIT else _pure


def prepare(g):
    """``(kernel module, rows)`` suitable for the bitset kernels on ``g``."""
    if g.n <= WORD_LIMIT:
        return backend, g.word_rows()
    return _pure, g.rows
