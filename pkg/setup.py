from setuptools import setup, Extension

import numpy as np

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "zetamds._distkernels",
                ["src/zetamds/_distkernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )

# The compiled kernels are optional: the package falls back to the numpy
# implementation when the extension is absent (see zetamds.metrics).
setup(ext_modules=ext_modules)
