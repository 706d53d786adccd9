"""Build script: compiles the optional Cython kernel extension.

The package is pure Python plus one optional extension module,
fracnewton._kernels. If Cython or a C compiler is unavailable the build
falls back to the pure-Python kernels with identical semantics.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a warning instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        sys.stderr.write(
            "warning: building the fracnewton._kernels extension failed "
            f"({exc!r}); falling back to the pure-Python kernels\n"
        )


def extensions():
    if os.environ.get("FRACNEWTON_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write(
            "warning: Cython not installed; using pure-Python kernels\n"
        )
        return []
    ext = Extension(
        "fracnewton._kernels",
        sources=["src/fracnewton/_kernels.pyx"],
        # gcc folds adjacent cos/sin calls into glibc sincos, whose sin
        # can differ by 1 ulp from a standalone call; that breaks bit
        # parity with the pure-Python kernels, so keep the plain calls
        extra_compile_args=[
            "-fno-builtin-sin",
            "-fno-builtin-cos",
            "-fno-builtin-sincos",
        ],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
