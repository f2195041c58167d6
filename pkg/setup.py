"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to build it — no
Cython, no C compiler — downgrades to a warning instead of breaking the
install. Set MULTIEKR_NO_EXT=1 to skip the extension on purpose.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the compiled kernels failed ({exc}); "
            "installing with the pure-Python fallback only.",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("MULTIEKR_NO_EXT") == "1":
        return []
    pyx = os.path.join("src", "multiekr", "_kernels_c.pyx")
    c = os.path.join("src", "multiekr", "_kernels_c.c")
    try:
        from Cython.Build import cythonize

        return cythonize(
            [Extension("multiekr._kernels_c", [pyx])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        if os.path.exists(c):
            return [Extension("multiekr._kernels_c", [c])]
        print(
            "WARNING: Cython is unavailable and no pregenerated C source "
            "exists; skipping the compiled kernels.",
            file=sys.stderr,
        )
        return []


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
