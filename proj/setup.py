from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "puzzlespread._core",
        [
            "src/bindings.cpp",
            "src/geometry.cpp",
            "src/model.cpp",
            "src/packing.cpp",
            "src/empirical.cpp",
            "src/svg.cpp",
        ],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
