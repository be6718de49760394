"""Kernel selection: the compiled _speedups extension when built, pure
Python otherwise. Set SRLKIT_PURE=1 to force the pure path."""

import os

from srlkit import _pointers, _sexpr

_impl = None
if not os.environ.get("SRLKIT_PURE"):
    try:
        from srlkit import _speedups as _impl
    except ImportError:
        _impl = None

if _impl is not None:
    BACKEND = "compiled"
    parse_node = _impl.parse_node
    parse_expr_parts = _impl.parse_expr_parts
    roundtrip_exhaustive = _impl.roundtrip_exhaustive
else:
    BACKEND = "pure"
    parse_node = _sexpr.parse_node
    parse_expr_parts = _pointers.parse_expr_parts
    roundtrip_exhaustive = _pointers.roundtrip_exhaustive


def backend() -> str:
    """Name of the active scanning backend: 'compiled' or 'pure'."""
    return BACKEND
