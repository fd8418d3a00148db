"""Build script: compiles the optional speedup extension.

The package is fully functional without the extension (pure-Python kernels
are selected at import time), so a missing compiler or Cython only costs
speed, never correctness.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/veerlab/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
