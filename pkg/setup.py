"""Build script: compiles the Cython hot-kernel extension when possible.

The package works without the extension (a numpy fallback is selected at
import time), so any failure here only costs speed, not correctness.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sbsim/kernels/_core.pyx"],
        language_level="3",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
