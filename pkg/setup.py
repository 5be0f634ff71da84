"""Build script: compiles the optional Cython summation kernel.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time), so a failing compiler
only costs speed, not correctness.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "plancherel.kernels._fastsum",
                ["src/plancherel/kernels/_fastsum.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"warning: Cython unavailable, building pure-Python only ({exc})\n")

setup(ext_modules=ext_modules)
