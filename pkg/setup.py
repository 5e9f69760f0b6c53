"""Build hook: compile the optional fast-kernel extension when Cython is around.

The package is fully functional without the extension (pure-Python kernels
are selected at import time); a failed build is therefore non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hochcalc/_fastops.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
