import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

eigen = os.environ.get("EIGEN3_INCLUDE_DIR", "/usr/include/eigen3")

ext = Pybind11Extension(
    "eqforms._eqforms",
    ["python/bindings.cpp", "src/examples.cpp", "src/report.cpp", "src/checks.cpp"],
    include_dirs=["include", eigen],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
