"""Build script: compiles the engine hot kernels to a C extension.

The kernels live in src/playstyle_lab/engine/_kernels.py (Cython pure
Python mode).  If compilation is impossible the package still installs and
falls back to running the same file interpreted; see
playstyle_lab.engine.backend.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "playstyle_lab.engine._ckernels",
                sources=["src/playstyle_lab/engine/_kernels.py"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
