"""Build script: compiles the optional Smith-normal-form kernel extension.

The package is pure Python plus one optional Cython extension holding the hot
row/column-elimination loops. If Cython or a C compiler is unavailable the
build proceeds without it and the package falls back to the pure-Python twin
(`stablekh._snf_pure`) at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/stablekh/_snf_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
