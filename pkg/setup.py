#!/usr/bin/python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

current_version = "0.3.0"

requirements = [
    "numpy>=1.20",
    "scipy>=1.8",
    "confapp",
    "logging-bootstrap",
    "python-dateutil",
    "safe-and-collaborative-architecture",
]

setup(
    name="pycoherence",
    version=current_version,
    description="""Cross-modal guided ordering of paired sentence and image sets""",
    author=["pycoherence developers"],
    license="MIT",
    include_package_data=True,
    packages=find_packages(
        exclude=["contrib", "docs", "tests", "examples", "deploy", "reports"]
    ),
    install_requires=requirements,
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["pycoherence=pycoherence.cli:main"]},
)
