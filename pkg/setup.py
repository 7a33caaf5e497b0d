import os

from setuptools import setup

ext_modules = []
if os.environ.get("PISOT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pisot/_corekernels.pyx"], language_level=3
        )
    except ImportError:
        # Pure-Python kernels are used when Cython is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
