import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# The compiled core is optional: if it fails to build, the package falls
# back to the pure NumPy implementation at import time.
extensions = [
    Extension(
        "cycssp._fastcore",
        ["src/cycssp/_fastcore.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
