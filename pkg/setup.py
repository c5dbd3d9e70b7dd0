from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is an optional speed-up; the package falls back to the
# pure-Python implementation when the extension is unavailable.
extensions = [
    Extension(
        "sswilf._ckernel",
        ["src/sswilf/_ckernel.pyx"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
    if cythonize
    else [],
)
