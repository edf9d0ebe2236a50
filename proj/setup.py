"""Builds the blwave package by delegating the extension to CMake.

The CMake project already knows how to build the `_core` pybind11 module
against the static core library; this just points setuptools at it and copies
the produced shared object into the wheel layout.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S",
                str(source_dir),
                "-B",
                str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )

        built = sorted((build_dir / "python" / "blwave").glob("_core.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module; "
                               "is pybind11 installed?")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], target)


setup(
    ext_modules=[CMakeExtension("blwave._core")],
    cmdclass={"build_ext": CMakeBuild},
)
