"""Build script for the optional compiled enumeration kernel.

The package is pure Python except for cyclemotive._ffenum, a small Cython
module that speeds up the finite-field subspace enumeration.  The extension
is marked optional: if Cython or a C compiler is unavailable the install
still succeeds and the package falls back to the pure-Python kernel
(cyclemotive._ffenum_py) at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cyclemotive._ffenum",
                ["src/cyclemotive/_ffenum.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
