from setuptools import Extension, setup

# The compiled straightening kernel is optional: without Cython (or a C
# compiler) the package falls back to the pure-Python kernel at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("fockdec._straighten_cy", ["src/fockdec/_straighten_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
