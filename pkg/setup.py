import os

from setuptools import Extension, setup

# The compiled scan kernels are an optional speedup; the package falls back
# to src/circletriples/_kernels_py.py when the extension is unavailable.
ext_modules = []
if os.environ.get("CIRCLETRIPLES_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "circletriples._kernels",
                    ["src/circletriples/_kernels.pyx"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
