import os

from setuptools import setup

ext_modules = []
if os.environ.get("PLECTIC_NO_EXT") != "1" and os.path.exists("src/plectic/_flowcore.pyx"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("plectic._flowcore", ["src/plectic/_flowcore.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: install works, the pure-Python flow kernel is used
        ext_modules = []

setup(ext_modules=ext_modules)
