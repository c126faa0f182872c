from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "eulerprod._ckernels",
        ["src/eulerprod/_ckernels.pyx"],
        # no contraction: keeps compensated sums exact and matches the
        # pure-Python backend bit for bit
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
