"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Set ``MSDIST_PURE_PYTHON=1`` to
force the fallback.  Both backends return identical values.
"""

import os

from msdist import _pykernels

python_kernels = _pykernels

try:
    from msdist import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("MSDIST_PURE_PYTHON", "") in ("", "0"):
    _impl = compiled_kernels
    BACKEND = "cython"
else:
    _impl = python_kernels
    BACKEND = "python"

hungarian = _impl.hungarian
edit_full = _impl.edit_full
edit_light = _impl.edit_light
fp_edit_full = _impl.fp_edit_full
fp_edit_light = _impl.fp_edit_light
dtw_full = _impl.dtw_full
dtw_light = _impl.dtw_light
fp_dtw_full = _impl.fp_dtw_full
fp_dtw_light = _impl.fp_dtw_light
lcs_full = _impl.lcs_full
lcs_light = _impl.lcs_light
lsp_full = _impl.lsp_full
lsp_light = _impl.lsp_light
lcs_matrix = _impl.lcs_matrix
lsp_matrix = _impl.lsp_matrix
