from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; strongdim.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("strongdim._ckernels", ["src/strongdim/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
