"""Picks the search kernel: compiled extension if importable, else pure Python."""

from unionint import _pykernels

try:
    from unionint import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None:
    run_search = _compiled.run_search
    BACKEND = "cython"
else:
    run_search = _pykernels.run_search
    BACKEND = "python"

PRED_ST = _pykernels.PRED_ST
PRED_UNION_L = _pykernels.PRED_UNION_L
PRED_LINT = _pykernels.PRED_LINT


def available_backends() -> dict:
    out = {"python": _pykernels.run_search}
    if _compiled is not None:
        out["cython"] = _compiled.run_search
    return out


def get_kernel(name: str | None = None):
    """Kernel by name ('python' / 'cython'); None means the import-time default."""
    if name is None:
        return run_search
    kernels = available_backends()
    if name not in kernels:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(kernels)}")
    return kernels[name]
