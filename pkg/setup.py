from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("srlkit._speedups", ["src/srlkit/_speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

# the package works without the extension (pure-Python fallback), so a
# failed compile must not fail the install
for ext in extensions:
    ext.optional = True

setup(ext_modules=extensions)
