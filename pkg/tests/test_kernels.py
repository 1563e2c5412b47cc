from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import graphs
from edgelab import _kernels, _pycore

try:
    from edgelab import _core
except ImportError:  # extension not built
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled extension not built")
KERNELS = ("canon_search", "max_matching_mate", "matching_number", "max_independent_set")


def _backend(env_value: str | None) -> str:
    env = dict(os.environ)
    env.pop("EDGELAB_PURE_PYTHON", None)
    if env_value is not None:
        env["EDGELAB_PURE_PYTHON"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "import edgelab; print(edgelab.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_pure_python_override():
    assert _backend("1") == "python"


@needs_core
def test_compiled_backend_selected_by_default():
    assert _backend(None) == "cython"
    assert _kernels.BACKEND in ("cython", "python")


@needs_core
@given(graphs(max_n=14))
def test_backends_agree(g):
    for name in KERNELS:
        assert getattr(_core, name)(g.n, g.adj) == getattr(_pycore, name)(g.n, g.adj)


@needs_core
def test_backends_agree_exhaustively_n_le_5():
    import itertools

    for n in range(6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            adj = [0] * n
            for k, (i, j) in enumerate(pairs):
                if mask >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            for name in KERNELS:
                assert getattr(_core, name)(n, adj) == getattr(_pycore, name)(n, adj)


@needs_core
def test_compiled_kernels_reject_oversize_input():
    with pytest.raises(ValueError):
        _core.matching_number(65, [0] * 65)
