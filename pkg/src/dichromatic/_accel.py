"""Kernel backend selection.

The compiled extension is used when it was built and the instance fits
its 64-bit limits; otherwise the pure-Python twin takes over. Both
expose the same functions and are interchangeable.
"""

from __future__ import annotations

from . import _kernels_py as pure

try:
    from . import _kernels as compiled  # type: ignore[attr-defined]
except ImportError:
    compiled = None  # type: ignore[assignment]

KERNEL_BACKEND = compiled.BACKEND_NAME if compiled is not None else pure.BACKEND_NAME


def available_backends() -> dict:
    """Importable kernel modules keyed by backend name."""
    backends = {pure.BACKEND_NAME: pure}
    if compiled is not None:
        backends[compiled.BACKEND_NAME] = compiled
    return backends


def scan_kernels(n: int, m: int, num_edges: int):
    """Best backend for an instance with n vertices, m arcs, num_edges
    underlying edges."""
    if (
        compiled is not None
        and n <= compiled.MAX_VERTICES
        and m <= compiled.MAX_ARCS
        and num_edges <= compiled.MAX_EDGES
    ):
        return compiled
    return pure
