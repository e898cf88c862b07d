import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "qwspectra._kernels",
        ["src/qwspectra/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
        optional=True,  # fall back to the NumPy kernel if compilation fails
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
