"""Install the package."""

from __future__ import annotations

from pathlib import Path
import re

from setuptools import find_packages, setup

root_path = Path(__file__).parent


def get_requirements(file: str) -> list[str]:
    """Requirements from file in requirements folder, nested ``-r`` files are followed."""
    requirements = []
    for line in (root_path / "requirements" / file).read_text(encoding="utf-8").splitlines():
        line = line.split("#")[0].strip()
        if line.startswith("-r"):
            requirements.extend(get_requirements(line[2:].strip()))
        elif line:
            requirements.append(line)
    return requirements


def get_version() -> str:
    """Version from package __init__ without importing it."""
    content = (root_path / "modalcores" / "__init__.py").read_text(encoding="utf-8")
    return re.search(r'^__version__ = "(.+)"', content, re.MULTILINE).group(1)


if __name__ == "__main__":

    setup(
        name="modalcores",
        version=get_version(),
        description="Estimate modal-sets of a density and use them as cluster cores.",
        long_description=(root_path / "README.md").read_text(encoding="utf-8"),
        long_description_content_type="text/markdown",
        license="MIT",
        python_requires=">=3.9",
        packages=find_packages(exclude=("tests", "tests.*")),
        install_requires=get_requirements("requirements.txt"),
        extras_require={"tests": get_requirements("tests.txt")},
        entry_points={"console_scripts": ["modalcores=modalcores.cli:main"]},
        classifiers=[
            "Development Status :: 3 - Alpha",
            "Programming Language :: Python :: 3",
            "License :: OSI Approved :: MIT License",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
    )
