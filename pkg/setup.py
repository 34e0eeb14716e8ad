from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: install pure-Python only; zetadim._backend falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "zetadim._ckernels",
                ["src/zetadim/_ckernels.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
