"""Kernel selection: compiled ``_rref`` if importable, else ``_rref_py``.

Set ``TILTREP_PURE_PYTHON=1`` to force the fallback.
"""
import os

from tiltrep import _rref_py

BACKEND = "python"
rref_rational = _rref_py.rref_rational
rref_modp = _rref_py.rref_modp

if os.environ.get("TILTREP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from tiltrep import _rref
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        rref_rational = _rref.rref_rational
        rref_modp = _rref.rref_modp
