"""CMake-driven build of the _faisac extension (pybind11 + Eigen core).

The wheel contains the `faisac` package with the compiled module inside.
System CMake >= 3.20 and a C++20 compiler are required.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_path = Path.cwd() / self.get_ext_fullpath(ext.name)
        pkg_dir = ext_path.parent.resolve()  # .../faisac
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={pkg_dir}{os.sep}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DFAISAC_BUILD_TESTS=OFF",
            "-DFAISAC_BUILD_CLI=OFF",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_faisac", "--parallel"],
            cwd=build_temp,
            check=True,
        )
        # pybind11_add_module may land the library in its own output dir;
        # normalize to the location setuptools expects.
        built = list(build_temp.glob("python/faisac/_faisac*.so"))
        if built and not ext_path.exists():
            ext_path.parent.mkdir(parents=True, exist_ok=True)
            self.copy_file(str(built[0]), str(ext_path))


setup(
    packages=["faisac"],
    package_dir={"faisac": "python/faisac"},
    ext_modules=[CMakeExtension("faisac._faisac")],
    cmdclass={"build_ext": CMakeBuild},
)
