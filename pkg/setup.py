import os

from setuptools import Extension, find_packages, setup

ext_modules = []
if os.environ.get("HYPREC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hyprec._kernels._core",
                    ["src/hyprec/_kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # no Cython: install pure-Python; the kernel selector falls back
        ext_modules = []

# metadata lives in pyproject.toml; setuptools older than 61 cannot read
# the [project] table, so the essentials are mirrored here for installs
# that run --no-build-isolation against a pre-PEP-621 toolchain
setup(
    name="hyprec",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    python_requires=">=3.10",
    install_requires=["numpy>=1.24", "mpmath>=1.3"],
    entry_points={"console_scripts": ["hyprec=hyprec.cli:main"]},
    ext_modules=ext_modules,
)
