from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "tqschur._tqschur",
    sources=[
        "bindings/module.cpp",
        "src/laurent.cpp",
        "src/combinat.cpp",
        "src/qschur.cpp",
        "src/hecke_clifford.cpp",
        "src/linalg.cpp",
        "src/repr.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
