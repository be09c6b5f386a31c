"""Kernel lane selection: compiled extension if importable, else pure Python.

Both lanes are bit-identical (tests/test_backend_parity.py enforces this), so
the choice only affects speed, never results.
"""

try:
    from . import _snf_core as _impl  # type: ignore[attr-defined]
except ImportError:  # extension not built on this install
    from . import _snf_pure as _impl  # type: ignore[no-redef]

snf_kernel = _impl.snf_kernel
det_kernel = _impl.det_kernel


def backend_name() -> str:
    """Name of the active kernel lane: "compiled" or "pure"."""
    return _impl.BACKEND
