import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension(
            "qsvbench.engine._kernels",
            ["src/qsvbench/engine/_kernels.pyx"],
            include_dirs=[numpy.get_include()],
            # -fcx-limited-range: plain complex multiply, no __muldc3 call
            extra_compile_args=["-O3", "-fcx-limited-range", "-ffp-contract=off"],
        )],
        language_level=3,
    )
except ImportError:
    # no Cython: pure-python fallback kernels are used at runtime
    extensions = []

setup(ext_modules=extensions)
