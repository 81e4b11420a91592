from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from tri36 import _kernels_py, kernels
from tri36.enumerate import proper_vectors
from tri36.tri import build, nonsingular_coloring

cy = pytest.importorskip("tri36._kernels", reason="compiled kernels not built")

VECTORS = [v for n in range(1, 21) for v in proper_vectors(n).proper]


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_python_forced_by_env():
    env = dict(os.environ, TRI36_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import tri36.kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("reflect", [False, True])
def test_canonical_code_parity(reflect):
    for v in VECTORS:
        offsets, nbrs = build(v).csr()
        assert cy.canonical_code(offsets, nbrs, reflect) == _kernels_py.canonical_code(offsets, nbrs, reflect)


def test_kempe_neighbors_parity():
    for v in VECTORS:
        g = build(v)
        offsets, nbrs = g.csr()
        col = bytes(nonsingular_coloring(g).colors)
        assert cy.kempe_neighbors(offsets, nbrs, col) == _kernels_py.kempe_neighbors(offsets, nbrs, col)


@settings(max_examples=100)
@given(st.lists(st.integers(0, 3), min_size=0, max_size=40))
def test_canonical_coloring_parity(colors):
    data = bytes(colors)
    assert cy.canonical_coloring(data) == _kernels_py.canonical_coloring(data)
    # first appearances are 0, 1, 2, ... in order
    seen = []
    for c in _kernels_py.canonical_coloring(data):
        if c not in seen:
            seen.append(c)
    assert seen == list(range(len(seen)))


def test_canonical_code_vertex_limit():
    offsets = list(range(257))
    nbrs = [0] * 256
    for mod in (cy, _kernels_py):
        with pytest.raises(ValueError):
            mod.canonical_code(offsets, nbrs, False)
