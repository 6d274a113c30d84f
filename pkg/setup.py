"""Build script for the optional compiled kernel.

The extension is best effort: if Cython or a C compiler is missing, the
install still succeeds and the package falls back to the pure-Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("kschub._svt_core", ["src/kschub/_svt_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
