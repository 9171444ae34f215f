from __future__ import annotations

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython the pure-Python fallback is used.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("tropflag._kernels", ["src/tropflag/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
