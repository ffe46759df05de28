from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    # optional=True: if the C toolchain is missing the install still succeeds
    # and the package falls back to the pure-Python kernels.
    ext_modules = cythonize(
        [
            Extension(
                "otislay._kernels",
                ["src/otislay/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
