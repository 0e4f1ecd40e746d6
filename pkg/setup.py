import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GAPFORGE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gapforge/_kernels.pyx"],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # Pure-Python fallback still works without the compiled core.
        ext_modules = []

setup(ext_modules=ext_modules)
