import os

import numpy as np
from setuptools import Extension, setup

extensions = []
if not os.environ.get("MSDIST_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        extensions = cythonize(
            [
                Extension(
                    "msdist._ckernels",
                    ["src/msdist/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    # no -ffast-math: kernels must round exactly like the Python fallback
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=extensions)
