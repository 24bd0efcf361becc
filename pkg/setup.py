import pathlib

from setuptools import find_packages, setup

README = pathlib.Path("README.md").read_text()

setup(
    name="lowerzdd",
    version="0.1.0",
    python_requires=">=3.8",
    description=(
        """
        Filters families of graph partitions, given as zero-suppressed decision
        diagrams, down to the partitions whose every connected component weighs
        at least a lower bound L, without enumerating the family.
        """
    ),
    long_description=README,
    author="Kossam Ouma",
    author_email="koss797@gmail.com",
    packages=find_packages(
        exclude=[
            "tests",
        ]
    ),
    install_requires=["msgpack", "networkx"],
    entry_points={
        "console_scripts": [
            "lowerzdd = lowerzdd.pipeline.cli:main",
        ]
    },
)
