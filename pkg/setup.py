import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TILESTAGE_PURE") != "1":
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tilestage._kernels",
                    ["src/tilestage/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython/numpy at build time: the pure-Python kernels take over
        ext_modules = []

setup(ext_modules=ext_modules)
