from setuptools import Extension, setup

# The compiled kernels are optional: if Cython or a C compiler is missing the
# install still succeeds and the package falls back to the pure-Python twins.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "symdirac._core._ckernels",
                ["src/symdirac/_core/_ckernels.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
