"""The compiled kernels must agree bit for bit with the Python fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

from msdist import kernels

py = kernels.python_kernels
cy = kernels.compiled_kernels
needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


@needs_cython
def test_hungarian_parity():
    rng = np.random.default_rng(0)
    for n in range(0, 12):
        for _ in range(10):
            C = np.round(rng.random((n, n)) * 5, rng.integers(0, 3))
            assert list(py.hungarian(C)) == list(cy.hungarian(C))


@needs_cython
@pytest.mark.parametrize("name", ["edit", "fp_edit", "dtw", "fp_dtw"])
def test_dp_parity(name):
    rng = np.random.default_rng(1)
    for _ in range(200):
        n, m = rng.integers(0 if "dtw" not in name else 1, 9, 2)
        D = rng.random((n, m)) * 3
        if name == "edit":
            args = (D, rng.random(n), rng.random(m))
        elif name.startswith("fp"):
            args = (D, float(rng.uniform(0.1, 2)))
        else:
            args = (D,)
        for variant in ("_full", "_light"):
            a = getattr(py, name + variant)(*args)
            b = getattr(cy, name + variant)(*args)
            assert a == b and type(b) is float


@needs_cython
def test_path_kernel_parity():
    rng = np.random.default_rng(2)
    paths = [rng.integers(0, 3, int(k)).astype(np.int64) for k in rng.integers(0, 7, 25)]
    for a in paths:
        for b in paths:
            for name in ("lcs_full", "lcs_light", "lsp_full", "lsp_light"):
                assert getattr(py, name)(a, b) == getattr(cy, name)(a, b)
    codes = np.concatenate(paths)
    offs = np.concatenate([[0], np.cumsum([len(p) for p in paths])]).astype(np.int64)
    for name in ("lcs_matrix", "lsp_matrix"):
        assert np.array_equal(getattr(py, name)(codes, offs[:11], offs[10:]), getattr(cy, name)(codes, offs[:11], offs[10:]))


def test_env_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "import msdist.kernels as k; print(k.BACKEND)"],
        env={**os.environ, "MSDIST_PURE_PYTHON": "1"}, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
