"""Kernel backend selection.

Prefers the compiled Cython extension, falls back to the pure-Python
kernels when the extension was not built. Both expose the same surface;
the solver only ever talks to the active one.
"""

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
    _active = _kernels
    BACKEND = "compiled"
except ImportError:
    _active = _kernels_py
    BACKEND = "pure"

run_newton = _active.run_newton
eval_poly = _active.eval_poly
frac_eval = _active.frac_eval
cmod = _active.cmod

CONVERGED = _kernels_py.CONVERGED
MAX_ITERATIONS = _kernels_py.MAX_ITERATIONS
DERIVATIVE_VANISHED = _kernels_py.DERIVATIVE_VANISHED
DIVERGED = _kernels_py.DIVERGED
AITKEN_FLOOR = _kernels_py.AITKEN_FLOOR


def get_backend(name=None):
    """Return a kernel module by name: None for the active one,
    'pure' or 'compiled' explicitly (ImportError if not built)."""
    if name is None:
        return _active
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        from . import _kernels  # raises ImportError when unavailable
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
