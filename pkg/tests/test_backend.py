import importlib
import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from tiltrep import _backend, _rref_py

try:
    from tiltrep import _rref
except ImportError:  # compiled kernels are optional
    _rref = None

needs_ext = pytest.mark.skipif(_rref is None, reason="compiled kernels not built")


def _cases(seed, n=300):
    rng = random.Random(seed)
    for _ in range(n):
        r, c = rng.randint(0, 8), rng.randint(0, 8)
        yield r, c, rng


@needs_ext
def test_compiled_rational_matches_python():
    for r, c, rng in _cases(1):
        rows = [[rng.choice([0, 0, 0, 1, -1, 2, Fraction(2, 3)]) for _ in range(c)] for _ in range(r)]
        assert _rref.rref_rational(rows, c) == _rref_py.rref_rational(rows, c)


@needs_ext
@pytest.mark.parametrize("p", [2, 3, 7, 32003, 2 ** 61 - 1])
def test_compiled_modp_matches_python(p):
    for r, c, rng in _cases(p):
        rows = [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)]
        assert _rref.rref_modp(rows, c, p) == _rref_py.rref_modp(rows, c, p)


def test_input_not_modified():
    rows = [[2, 4, 1], [1, 2, 0]]
    snapshot = [list(r) for r in rows]
    _backend.rref_rational(rows, 3)
    _backend.rref_modp(rows, 3, 5)
    assert rows == snapshot


def test_fallback_forced_by_environment():
    env = dict(os.environ, TILTREP_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import tiltrep._backend as b; print(b.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_reports_selection():
    mod = importlib.reload(_backend)
    expected = "python" if (_rref is None or os.environ.get("TILTREP_PURE_PYTHON") == "1") else "cython"
    assert mod.BACKEND == expected
