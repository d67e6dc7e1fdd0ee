import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BKPVC_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(["src/bkpvc/_ckernels.pyx"], language_level=3)

setup(ext_modules=ext_modules)
