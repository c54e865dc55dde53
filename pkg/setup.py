from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels.py falls back automatically
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("mahlerkit._kernels", ["src/mahlerkit/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
