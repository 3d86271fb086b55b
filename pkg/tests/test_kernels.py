import importlib
import os
import subprocess
import sys

import pytest

from toughham import _pykernels, kernels
from toughham.graph import complete_bipartite, petersen, random_gnp

try:
    _ext = importlib.import_module("toughham._kernels")
except ImportError:  # extension not built
    _ext = None

needs_ext = pytest.mark.skipif(_ext is None, reason="compiled kernels not built")


def sample_graphs():
    out = [petersen(), complete_bipartite(3, 5)]
    for seed in range(120):
        n = 3 + seed % 12
        p = ("1/5", "2/5", "1/2", "3/4")[seed % 4]
        out.append(random_gnp(n, p, seed))
    # exercise vertex 63 in the bitsets
    out.append(random_gnp(64, "1/20", 3))
    return out


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    assert "python" in kernels.available_backends()


def test_env_forces_python_backend():
    env = dict(os.environ, TOUGHHAM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from toughham import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@needs_ext
@pytest.mark.parametrize("g", sample_graphs(), ids=lambda g: f"n{g.n}m{g.m}")
def test_backends_agree(g):
    adj, n = g.adj, g.n
    full = g.full_mask
    assert _ext.count_components(adj, full) == _pykernels.count_components(adj, full)
    assert _ext.max_independent_set(adj, full) == _pykernels.max_independent_set(adj, full)
    for k in (1, 2, 3, 4):
        assert _ext.independent_k_subset(adj, full, k) == _pykernels.independent_k_subset(adj, full, k)
    if n > 16:
        return
    alpha = _pykernels.max_independent_set(adj, full).bit_count()
    for args in ((0, 0, False), (1, 1, True), (4, 1, True)):
        assert _ext.toughness_search(adj, n, alpha, *args) == _pykernels.toughness_search(adj, n, alpha, *args)
    assert _ext.ham_backtrack(adj, n) == _pykernels.ham_backtrack(adj, n)
    assert _ext.ham_dp(adj, n) == _pykernels.ham_dp(adj, n)
    assert _ext.longest_cycle(adj, n) == _pykernels.longest_cycle(adj, n)
    for s in range(n):
        for t in range(s + 1, n):
            if not adj[s] >> t & 1:
                assert _ext.vertex_flow(adj, n, s, t, n) == _pykernels.vertex_flow(adj, n, s, t, n)


@needs_ext
def test_independent_subset_with_top_vertex():
    # only vertex 63 is available: the result must not be mistaken for "none"
    g = random_gnp(64, 0, 0)
    mask = 1 << 63
    assert _ext.independent_k_subset(g.adj, mask, 1) == mask
    assert _pykernels.independent_k_subset(g.adj, mask, 1) == mask
    assert _ext.independent_k_subset(g.adj, mask, 2) == -1
