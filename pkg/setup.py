"""Build script: compiles the optional root-refinement kernel when Cython is
available.  The package is fully functional without it (a pure-Python twin is
selected at import time), so the extension is marked optional and any build
failure degrades to the pure path.

Set ROOTMEAN_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ROOTMEAN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "rootmean._aberth",
                    ["src/rootmean/_aberth.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
