"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the pure
Python module takes over with identical semantics. HYPREC_FORCE_FALLBACK=1
pins the pure path (useful for benchmarking and debugging).
"""

import os

from ._fallback import ConvergenceError, initial_points

if os.environ.get("HYPREC_FORCE_FALLBACK") == "1":
    from . import _fallback as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _fallback as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_core") else "fallback"

sturm_chain = _impl.sturm_chain
eval_sign = _impl.eval_sign
sign_variations = _impl.sign_variations
aberth_roots = _impl.aberth_roots

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "aberth_roots",
    "eval_sign",
    "initial_points",
    "sign_variations",
    "sturm_chain",
]
