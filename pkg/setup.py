import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RDF_SUMMARIZE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("rdfsummarize._kernel", ["src/rdfsummarize/_kernel.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
