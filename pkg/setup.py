from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    # No build toolchain: install pure-Python; the kernel fallback is selected
    # at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "msrkit.stretch._kernel",
                ["src/msrkit/stretch/_kernel.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
