#!/usr/bin/env python
try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(
    name="ssakg",
    version="0.3.0",
    description="Sequence memory on a structural associative knowledge graph",
    packages=[
        "ssakg",
        "ssakg.memory",
        "ssakg.experiments",
    ],
    scripts=[
        "generate_capacity_table.py",
    ],
    entry_points={
        "console_scripts": ["ssakg = ssakg.cli:main"],
    },
    install_requires=[
        "enum-compat>=0.0.2",
        "numpy>=1.22",
        "beautifulsoup4>=4.3.2",
    ],
)
