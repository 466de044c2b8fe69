"""Build script: compiles the optional exact-arithmetic kernel extension.

The package is fully functional without the extension (a pure-Python twin
of the kernel is selected at import time), so the build is marked optional
and any compilation failure falls back to the pure install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "whsa._core._ccore",
        ["src/whsa/_core/_ccore.pyx"],
        extra_compile_args=["-O2"],
    )
    ext.optional = True
    ext_modules = cythonize(
        [ext],
        compiler_directives={"language_level": 3, "embedsignature": True},
    )

setup(ext_modules=ext_modules)
