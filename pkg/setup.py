from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dwlab._kernels",
                ["src/dwlab/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: the package falls back to the pure-Python kernels at import.
    ext_modules = []

setup(ext_modules=ext_modules)
