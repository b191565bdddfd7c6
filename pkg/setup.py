"""Build hook for the optional compiled kernels.

The package is pure Python plus one accelerator extension.  If Cython or a
C compiler is unavailable the install still succeeds and the package falls
back to the pure-Python kernels at import time.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        warnings.warn(
            f"compiled kernels not built ({exc}); "
            "falling back to the pure-Python implementation"
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(["src/womcode/_kernels.pyx"], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
