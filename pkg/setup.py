import os

from setuptools import setup

ext_modules = []
if os.environ.get("VNUMIC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension(
            "vnumic._kernels._ccore",
            ["src/vnumic/_kernels/_ccore.pyx"],
            optional=True,
        )
        ext_modules = cythonize([ext], language_level="3")
    except ImportError:
        # No Cython: install with the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
