import subprocess
import sys

import pytest

from qmu import backend
from qmu import _kernels


def test_backend_resolution(monkeypatch):
    monkeypatch.delenv("QMU_BACKEND", raising=False)
    assert backend.backend_name() in ("numba", "python")
    monkeypatch.setenv("QMU_BACKEND", "python")
    assert backend.backend_name() == "python"
    assert backend.backend_name("numba") == "numba"  # override beats env
    monkeypatch.setenv("QMU_BACKEND", "nonsense")
    with pytest.raises(ValueError):
        backend.backend_name()


def test_python_kernel_is_the_plain_function():
    fn = backend.kernel("cover_scan", override="python")
    assert fn is getattr(_kernels.cover_scan, "py_func", _kernels.cover_scan)


def test_numba_kernel_is_compiled():
    fn = backend.kernel("mu_branch_bound", override="numba")
    assert hasattr(fn, "py_func")  # a numba dispatcher wraps the original


def test_package_works_without_numba():
    # simulate a numba-free interpreter: the import must fall back cleanly
    code = """
import builtins
real = builtins.__import__
def block(name, *a, **k):
    if name == "numba" or name.startswith("numba."):
        raise ImportError("blocked for test")
    return real(name, *a, **k)
builtins.__import__ = block
import qmu
assert qmu.backend_name() == "python"
g = qmu.hypercube(2)
table = qmu.mu_table(g)
assert tuple(a.value for a in table.aggregates()) == (1, 4, 3, 4)
assert qmu.max_pathforest_subset(3) == 5
print("fallback-ok")
"""
    proc = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == 0, proc.stderr
    assert "fallback-ok" in proc.stdout
