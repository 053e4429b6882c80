"""Kernel backend selection.

QMU_BACKEND chooses how the hot kernels in `qmu._kernels` run:

  auto    numba when importable, plain Python otherwise (default)
  numba   force the nopython builds (error if numba is missing)
  python  force the plain-Python originals

Both builds are bit-identical in behavior; `qmu bench` measures the gap.
"""

from __future__ import annotations

import os

from . import _kernels

_CHOICES = ("auto", "numba", "python")


def backend_name(override: str | None = None) -> str:
    """Resolve the effective backend: explicit override > env var > auto."""
    name = override if override is not None else os.environ.get("QMU_BACKEND", "auto")
    if name not in _CHOICES:
        raise ValueError(f"QMU_BACKEND must be one of {_CHOICES}, got {name!r}")
    if name == "auto":
        return "numba" if _kernels.NUMBA_AVAILABLE else "python"
    if name == "numba" and not _kernels.NUMBA_AVAILABLE:
        raise RuntimeError("QMU_BACKEND=numba but numba is not importable")
    return name


def kernel(name: str, override: str | None = None):
    """Fetch a kernel by name in the selected build."""
    fn = getattr(_kernels, name)
    if backend_name(override) == "python":
        return getattr(fn, "py_func", fn)
    return fn


def warm_up() -> None:
    """Force-compile the numba kernel builds by running tiny real searches.

    One-time cost (cached on disk by numba afterwards); a no-op on the
    python backend.
    """
    if backend_name() != "numba":
        return
    from .graphs import hypercube
    from . import search, patterns

    g = hypercube(2)
    search.mu_exact(g, 2, "min")
    search.mu_exact(g, 2, "max")
    search.interval_feasible(g, {0}, 2)
    patterns.max_pathforest_subset(3)
    patterns.verify_subset_lemma(3)
