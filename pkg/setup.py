"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (pure-Python
fallback in cycleduality._kernels_py); a failed compile only warns.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            sys.stderr.write(f"warning: skipping compiled kernels ({exc})\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            sys.stderr.write(
                f"warning: {ext.name} failed to compile ({exc}); "
                "falling back to pure Python\n"
            )


def extensions():
    import os

    if not os.path.exists("src/cycleduality/_kernels.pyx"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        return []
    return cythonize(
        [Extension("cycleduality._kernels", ["src/cycleduality/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
