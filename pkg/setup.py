import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if Cython (or a C compiler)
# is unavailable the package installs pure-Python only and selects the
# fallback implementations at import time.
ext_modules = []
if os.environ.get("HYPERMOD_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hypermod._kernels_cy", ["src/hypermod/_kernels_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
