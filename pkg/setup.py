from setuptools import setup, find_packages

VERSION = "0.1.0"
PACKAGE_NAME = "carefree-skeleta"

DESCRIPTION = "Exact skeleta of arithmetic curves under base change 📐"
with open("README.md", encoding="utf-8") as f:
    LONG_DESCRIPTION = f.read()

setup(
    name=PACKAGE_NAME,
    version=VERSION,
    packages=find_packages(exclude=("tests",)),
    include_package_data=True,
    package_data={
        "cfskel": [
            "settings/*.json",
            "settings/*/*.json",
            "settings/*/*/*.json",
            "settings/*/*/*/*.json",
        ]
    },
    entry_points={"console_scripts": ["cfskel = cfskel.cli:main"]},
    install_requires=[
        "click>=8.1.3",
        "carefree-toolkit>=0.3.10",
        "networkx>=3.0",
        "sympy>=1.12",
    ],
    extras_require={
        "tests": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
    },
    python_requires=">=3.8",
    author="carefree0910",
    author_email="syameimaru.saki@gmail.com",
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    keywords="python arithmetic-geometry skeleton metric-graph",
)
