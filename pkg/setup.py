"""Build script: compiles the enumeration kernels when Cython is available.

The package is fully functional without the extension (pure-Python fallback);
set ANGLEKIT_SKIP_EXT=1 to skip compilation explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ANGLEKIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "anglekit._kernels",
                    sources=["src/anglekit/_kernels.pyx"],
                    # -ffp-contract=off keeps float results bit-identical to
                    # the pure-Python backend (no FMA contraction)
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
