"""Build hook for the optional compiled search kernel.

The package is pure Python; if Cython is available, the ground-countermodel
search gets a compiled twin (foundry._groundsearch) selected at import. A
missing compiler or Cython only costs speed, never functionality.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("foundry._groundsearch", ["src/foundry/_groundsearch.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
