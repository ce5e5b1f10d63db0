import os

from setuptools import Extension, setup

# The statistical special functions (incomplete beta/gamma) exist twice:
# a Cython extension for speed and a pure-Python twin selected at import
# when the extension is unavailable.  Set POLICYTONE_NO_EXT=1 to skip the
# compiled build entirely.
ext_modules = []
if os.environ.get("POLICYTONE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "policytone.econ._special_c",
                    ["src/policytone/econ/_special_c.pyx"],
                    # -ffp-contract=off keeps results bit-identical to the
                    # pure-Python backend (no FMA contraction).
                    extra_compile_args=["-O2", "-ffp-contract=off"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
