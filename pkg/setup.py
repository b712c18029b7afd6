import os

from setuptools import Extension, setup

# The compiled kernels are an optimisation, not a requirement.  A build
# without Cython (or with NCTOPO_NO_EXT set) produces a pure-Python wheel
# and the package selects the fallback implementations at import time.
ext_modules = []
if not os.environ.get("NCTOPO_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "nctopo._kernels._fast",
                    ["src/nctopo/_kernels/_fast.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
