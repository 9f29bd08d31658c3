"""Setup script for dblcat."""
import setuptools
from dblcat import __version__

with open("README.md", "r") as readme_file:
    long_description = readme_file.read()

setuptools.setup(
    name="dblcat",
    version=__version__,
    description="Exact finite 2-categories and double categories: "
                "bi-initiality, bi-representations, bi-adjoints and bi-limits.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"dblcat": ["fixtures/*.dc"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Development Status :: 4 - Beta",
        "Natural Language :: English",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Typing :: Typed",
    ],
    python_requires=">=3.8",
    install_requires=[
        "typeguard>=2.13,<3",
        "tqdm>=4.64",
        "tabulate>=0.9",
    ],
    extras_require={
        "test": ["pytest>=7", "hypothesis>=6"],
    },
    entry_points={
        "console_scripts": ["dblcat = dblcat.cli.main:main"],
    },
)
