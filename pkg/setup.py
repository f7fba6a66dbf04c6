import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# twin in sphcurves._speed._pure when the extension is absent or fails to build.
ext_modules = []
if os.environ.get("SPHCURVES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sphcurves._speed._kernels",
                    ["src/sphcurves/_speed/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
