"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
twin of every kernel is selected at import time), so compilation
failures are downgraded to a warning instead of aborting the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"skipping C extension, using pure-Python kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}, using pure-Python kernels: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/aplie/_kernels/_speedups.pyx"], language_level=3
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
